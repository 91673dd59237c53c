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

#include <cmath>
#include <numeric>

#include "asnkit/error.hpp"
#include "asnkit/graph_stats.hpp"
#include "asnkit/hierarchy.hpp"
#include "doctest.h"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace asnkit;
using asnkit::testing::brute_summary;
using asnkit::testing::make_tree;
using R = GrammaticalRole;
using Edges = std::vector<std::pair<int, int>>;

TEST_CASE("closed-form summaries") {
  const Edges triangle = {{0, 1}, {1, 2}, {2, 0}};
  auto s = summarize_graph(3, triangle);
  CHECK(s.clustering == 1.0);
  CHECK(s.diameter == 1);
  CHECK(s.average_path_length == 1.0);
  CHECK(s.average_degree == 2.0);

  const Edges chain = {{0, 1}, {1, 2}, {2, 3}};
  s = summarize_graph(4, chain);
  CHECK(s.clustering == 0.0);
  CHECK(s.diameter == 3);
  CHECK(s.average_path_length == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(s.lcc_fraction == 1.0);

  // antiparallel pair and a self loop collapse in the projection
  s = summarize_graph(3, Edges{{0, 1}, {1, 0}, {1, 1}});
  CHECK(s.edge_count == 3);
  CHECK(s.undirected_edge_count == 1);
  CHECK(s.component_count == 2);
  CHECK(s.lcc_size == 2);
  CHECK(s.lcc_fraction == doctest::Approx(2.0 / 3.0));

  s = summarize_graph(1, Edges{});
  CHECK(s.diameter == 0);
  CHECK(s.average_path_length == 0.0);

  CHECK_THROWS_AS(summarize_graph(0, Edges{}), Error);
  CHECK_THROWS_AS(summarize(Asn{}), Error);
}

TEST_CASE("summaries agree with the brute-force oracle") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(25));
    const double p = rng.uniform() * 0.3;
    Edges edges;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (rng.uniform() < p) edges.emplace_back(u, v);
      }
    }
    const auto got = summarize_graph(static_cast<std::size_t>(n), edges);
    const auto want = brute_summary(n, edges);
    CHECK(got.edge_count == static_cast<std::int64_t>(edges.size()));
    CHECK(got.undirected_edge_count == want.undirected_edges);
    CHECK(got.diameter == want.diameter);
    CHECK(got.component_count == want.components);
    CHECK(got.lcc_size == want.lcc_size);
    CHECK(std::abs(got.average_degree - want.average_degree) <= 1e-12);
    CHECK(std::abs(got.clustering - want.clustering) <= 1e-12);
    CHECK(std::abs(got.average_path_length - want.average_path_length) <= 1e-12);
    if (got.undirected_edge_count > 0 && got.lcc_size > 1) {
      CHECK(static_cast<double>(got.diameter) >= got.average_path_length);
      CHECK(got.average_path_length >= 1.0);
    }
  }
}

TEST_CASE("depth against diameter") {
  SUBCASE("disjoint chains") {
    CorpusSlice slice;
    slice.century = 12;
    slice.trees.push_back(make_tree("a", 12, testing::chain_specs({"a0", "a1", "a2"}, {R::V, R::N, R::AJ})));
    slice.trees.push_back(make_tree("b", 12, testing::chain_specs({"b0", "b1"}, {R::V, R::N})));
    const auto rows = depth_vs_diameter({slice}, {aggregate(slice.trees)});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].max_tree_depth == 2);
    CHECK(rows[0].diameter == 2);
  }
  SUBCASE("a leaf shared with the next root") {
    CorpusSlice slice;
    slice.century = 12;
    slice.trees.push_back(make_tree("a", 12, testing::chain_specs({"a0", "a1", "a2"}, {R::V, R::N, R::V})));
    slice.trees.push_back(make_tree("b", 12, testing::chain_specs({"a2", "b1", "b2"}, {R::V, R::N, R::AJ})));
    const auto rows = depth_vs_diameter({slice}, {aggregate(slice.trees)});
    CHECK(rows[0].max_tree_depth == 2);
    CHECK(rows[0].diameter == 4);
  }
  SUBCASE("single token") {
    CorpusSlice slice;
    slice.century = 12;
    slice.trees.push_back(make_tree("a", 12, {{"x", R::N, 0}}));
    const auto rows = depth_vs_diameter({slice}, {aggregate(slice.trees)});
    CHECK(rows[0].max_tree_depth == 0);
    CHECK(rows[0].diameter == 0);
  }
  SUBCASE("cross-linked corpus") {
    const auto slices = testing::cross_link_corpus(14);
    std::vector<Asn> nets;
    for (const auto& s : slices) nets.push_back(aggregate(s.trees));
    const auto rows = depth_vs_diameter(slices, nets);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(rows[i].century == 14 + static_cast<int>(i));
      CHECK(rows[i].max_tree_depth == 3);
      CHECK(rows[i].diameter == (i < 2 ? 3 : 12));
    }
  }
  SUBCASE("empty slice") {
    CorpusSlice slice;
    slice.century = 12;
    CHECK_THROWS_AS(depth_vs_diameter({slice}, {Asn{}}), Error);
  }
}

TEST_CASE("degree sequences") {
  Asn chain;
  auto k = [](const std::string& s) { return NodeKey{s, R::N}; };
  for (const char* s : {"a", "b", "c"}) chain.nodes[k(s)].frequency = 1;
  chain.edges[{k("a"), k("b")}].weight = 4;
  chain.edges[{k("b"), k("c")}].weight = 1;
  const auto seq = degree_sequences(chain);
  CHECK(seq.in == std::vector<std::int64_t>{0, 1, 1});
  CHECK(seq.out == std::vector<std::int64_t>{1, 1, 0});
  CHECK(seq.total == std::vector<std::int64_t>{1, 2, 1});

  const Asn fig = aggregate({
      make_tree("A", 11, {{"werden", R::AX, 0}, {"er", R::PP, 1}, {"sehen", R::PCPS, 1}}),
      make_tree("B", 11, {{"werden", R::AX, 0}, {"gehen", R::IV, 1}, {"er", R::PP, 2}}),
  });
  // AX werden, IV gehen, PCPS sehen, PP er
  CHECK(select(degree_sequences(fig), DegreeVariable::kTotal) == std::vector<std::int64_t>{3, 2, 1, 2});
  CHECK(influence_ranking(fig, forward_levels(fig)).front().key.display() == "AX werden");

  const auto empty = degree_sequences(Asn{});
  CHECK(empty.in.empty());
  CHECK(empty.total.empty());

  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    Asn g;
    for (int i = 0; i < 10; ++i) g.nodes[k(std::to_string(i))].frequency = 1;
    for (int e = 0; e < 25; ++e) {
      g.edges[{k(std::to_string(rng.below(10))), k(std::to_string(rng.below(10)))}].weight += 1;
    }
    const auto d = degree_sequences(g);
    const auto sum = [](const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
    CHECK(sum(d.in) == static_cast<std::int64_t>(g.edges.size()));
    CHECK(sum(d.out) == static_cast<std::int64_t>(g.edges.size()));
  }
}

TEST_CASE("degree variable names") {
  for (auto v : {DegreeVariable::kIn, DegreeVariable::kOut, DegreeVariable::kTotal}) {
    CHECK(parse_degree_variable(to_string(v)) == v);
  }
  CHECK_FALSE(parse_degree_variable("both").has_value());
}
