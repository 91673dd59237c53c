// Copyright 2026 The asnkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <sstream>

#include "asnkit/asn.hpp"
#include "asnkit/error.hpp"
#include "asnkit/export.hpp"
#include "doctest.h"
#include "support/synthetic.hpp"

using namespace asnkit;
using asnkit::testing::make_tree;
using R = GrammaticalRole;

namespace {

// Two sentences sharing the root "AX werden"; after merging there are two
// paths werden -> er and werden -> gehen -> er.
std::vector<DependencyTree> two_sentence_fixture() {
  return {
      make_tree("A", 11, {{"werden", R::AX, 0}, {"er", R::PP, 1}, {"sehen", R::PCPS, 1}}),
      make_tree("B", 11, {{"werden", R::AX, 0}, {"gehen", R::IV, 1}, {"er", R::PP, 2}}),
  };
}

int count_paths(const Asn& asn, const NodeKey& from, const NodeKey& to) {
  if (from == to) return 1;
  int total = 0;
  for (const auto& [key, info] : asn.edges) {
    if (key.first == from) total += count_paths(asn, key.second, to);
  }
  return total;
}

NodeKey key(R role, const std::string& lemma) { return NodeKey{lemma, role}; }

std::vector<DependencyTree> random_forest(std::uint64_t seed, int count) {
  Rng rng(seed);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", "f"};
  const std::vector<R> roles = {R::N, R::V, R::AJ, R::PR};
  std::vector<DependencyTree> trees;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const auto heads = testing::random_heads(rng, n);
    std::vector<testing::TokenSpec> specs;
    for (int h : heads) {
      specs.push_back({vocab[rng.below(vocab.size())], roles[rng.below(roles.size())], h});
    }
    trees.push_back(make_tree("t" + std::to_string(i), 13, specs));
  }
  return trees;
}

}  // namespace

TEST_CASE("node keys display as role then lemma") {
  NodeKey k{"werden", R::AX};
  CHECK(k.display() == "AX werden");
  CHECK(NodeKey::parse("AX werden") == k);
  CHECK(NodeKey::parse("N haus vil") == NodeKey{"haus vil", R::N});
  CHECK_THROWS_AS(NodeKey::parse("XX werden"), Error);
  CHECK(NodeKey{"werden", R::AX} != NodeKey{"werden", R::V});
}

TEST_CASE("aggregating the two-sentence fixture creates two paths from the root") {
  const Asn asn = aggregate(two_sentence_fixture());
  CHECK(asn.century == 11);
  CHECK(asn.node_count() == 4);
  CHECK(asn.edge_count() == 4);
  CHECK(count_paths(asn, key(R::AX, "werden"), key(R::PP, "er")) == 2);
  CHECK(asn.nodes.at(key(R::AX, "werden")).frequency == 2);
  CHECK(asn.nodes.at(key(R::PP, "er")).frequency == 2);
  CHECK(heads(asn) == std::vector<NodeKey>{key(R::AX, "werden")});
  const auto& e = asn.edges.at({key(R::AX, "werden"), key(R::PP, "er")});
  CHECK(e.sentences == std::set<std::string>{"A"});
  CHECK(e.rules == std::set<PhraseRule>{PhraseRule::VP});
}

TEST_CASE("aggregation is additive and order independent") {
  const auto trees = two_sentence_fixture();
  const Asn once = aggregate({trees[0]});
  const Asn twice = aggregate({trees[0], trees[0]});
  CHECK(twice.node_count() == once.node_count());
  for (const auto& [k, info] : once.edges) CHECK(twice.edges.at(k).weight == 2 * info.weight);
  for (const auto& [k, info] : once.nodes) CHECK(twice.nodes.at(k).frequency == 2 * info.frequency);

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto forest = random_forest(seed, 12);
    const Asn base = aggregate(forest);
    Rng rng(seed * 7);
    for (std::size_t i = forest.size(); i > 1; --i) std::swap(forest[i - 1], forest[rng.below(i)]);
    CHECK(aggregate(forest) == base);

    std::int64_t arcs = 0;
    for (const auto& t : forest) arcs += static_cast<std::int64_t>(t.size()) - 1;
    CHECK(base.total_weight() == arcs);

    const std::vector<DependencyTree> left(forest.begin(), forest.begin() + 5);
    const std::vector<DependencyTree> right(forest.begin() + 5, forest.end());
    const Asn l = aggregate(left);
    const Asn r = aggregate(right);
    for (const auto& [k, info] : base.edges) {
      const std::int64_t lw = l.edges.contains(k) ? l.edges.at(k).weight : 0;
      const std::int64_t rw = r.edges.contains(k) ? r.edges.at(k).weight : 0;
      CHECK(info.weight == lw + rw);
    }
    for (const auto& [k, info] : base.edges) {
      CHECK(base.nodes.contains(k.first));
      CHECK(base.nodes.contains(k.second));
      CHECK(info.weight >= 1);
    }
  }
}

TEST_CASE("a single tree aggregates to its own head graph") {
  const auto tree = make_tree("s", 12, {{"v", R::V, 0}, {"a", R::N, 1}, {"b", R::N, 1}, {"c", R::AJ, 2}});
  const Asn asn = aggregate({tree});
  CHECK(asn.node_count() == tree.size());
  CHECK(asn.edge_count() == tree.size() - 1);
  for (const Token& t : tree.tokens) {
    if (t.head == 0) continue;
    const auto& h = tree.token(t.head);
    CHECK(asn.edges.at({key(*h.role, h.lemma), key(*t.role, t.lemma)}).weight == 1);
  }
}

TEST_CASE("disjoint vocabularies give a disjoint union") {
  const Asn asn = aggregate({make_tree("x", 1, {{"a", R::V, 0}, {"b", R::N, 1}}),
                             make_tree("y", 1, {{"c", R::V, 0}, {"d", R::N, 1}, {"e", R::N, 1}})});
  CHECK(asn.node_count() == 5);
  CHECK(asn.edge_count() == 3);
  CHECK(heads(asn) == std::vector<NodeKey>{key(R::V, "c"), key(R::V, "a")});
}

TEST_CASE("aggregate rejects mixed centuries and accepts empty input") {
  CHECK(aggregate({}).node_count() == 0);
  CHECK_THROWS_AS(aggregate({make_tree("x", 1, {{"a", R::V, 0}}), make_tree("y", 2, {{"a", R::V, 0}})}), Error);
}

TEST_CASE("missing tokens are left out of the network") {
  const Asn asn = aggregate({make_tree("m", 1, {{"werden", R::AX, 0}, {"!", R::N, 1}, {"alt", R::AJ, 2}, {"er", R::PP, 1}})});
  CHECK(asn.node_count() == 3);
  CHECK(asn.edge_count() == 1);
}

TEST_CASE("heads of small graphs") {
  CHECK(heads(aggregate({make_tree("x", 1, {{"a", R::V, 0}})})) == std::vector<NodeKey>{key(R::V, "a")});
  Asn cycle;
  cycle.nodes[key(R::N, "a")].frequency = 1;
  cycle.nodes[key(R::N, "b")].frequency = 1;
  cycle.edges[{key(R::N, "a"), key(R::N, "b")}].weight = 1;
  cycle.edges[{key(R::N, "b"), key(R::N, "a")}].weight = 1;
  CHECK(heads(cycle).empty());
}

TEST_CASE("induced subnetworks") {
  const Asn asn = aggregate({make_tree("x", 1, {{"v", R::V, 0}, {"haus", R::N, 1}, {"alt", R::AJ, 2}, {"in", R::PR, 1}, {"stat", R::N, 4}})});
  auto all_nodes = [](const NodeKey&, const NodeInfo&) { return true; };
  const Asn vp = induced_subnetwork(asn, all_nodes, edges_with_rules({PhraseRule::VP}));
  CHECK(vp.edge_count() == 2);
  for (const auto& [k, info] : vp.edges) CHECK(info.rules.contains(PhraseRule::VP));
  CHECK(induced_subnetwork(asn, all_nodes, [](const EdgeKey&, const EdgeInfo&) { return true; }) == asn);
  const Asn none = induced_subnetwork(asn, [](const NodeKey&, const NodeInfo&) { return false; },
                                      [](const EdgeKey&, const EdgeInfo&) { return false; });
  CHECK(none.node_count() == 0);
  CHECK(none.edge_count() == 0);
  const Asn no_nouns = induced_subnetwork(asn, [](const NodeKey& k, const NodeInfo&) { return k.role != R::N; },
                                          [](const EdgeKey&, const EdgeInfo&) { return true; });
  CHECK(no_nouns.node_count() == 3);
  CHECK(no_nouns.edge_count() == 1);  // v -> in
}

TEST_CASE("exports carry node and edge attributes") {
  Asn asn = aggregate(two_sentence_fixture());
  std::ostringstream dot, graphml, csv;
  write_dot(dot, asn, {"seed=7"});
  write_graphml(graphml, asn, {"seed=7"});
  write_edge_csv(csv, asn, {"seed=7"});
  CHECK(dot.str().starts_with("// seed=7\ndigraph asn {\n"));
  CHECK(dot.str().find("label=\"AX werden\", lemma=\"werden\", role=\"AX\", frequency=2") != std::string::npos);
  CHECK(dot.str().find("[weight=1, rules=\"VP\"]") != std::string::npos);
  CHECK(graphml.str().find("<!-- seed=7 -->") != std::string::npos);
  CHECK(graphml.str().find("<data key=\"frequency\">2</data>") != std::string::npos);
  CHECK(std::count(graphml.str().begin(), graphml.str().end(), '\n') > 10);
  CHECK(csv.str() ==
        "# seed=7\n"
        "source_role,source_lemma,target_role,target_lemma,weight\n"
        "AX,werden,IV,gehen,1\n"
        "AX,werden,PCPS,sehen,1\n"
        "AX,werden,PP,er,1\n"
        "IV,gehen,PP,er,1\n");
}
