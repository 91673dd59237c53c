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

#include "asnkit/asn.hpp"

#include <algorithm>

#include "asnkit/error.hpp"

namespace asnkit {

std::string NodeKey::display() const {
  std::string out(to_string(role));
  out += ' ';
  out += lemma;
  return out;
}

NodeKey NodeKey::parse(std::string_view display) {
  const std::size_t space = display.find(' ');
  if (space == std::string_view::npos) {
    throw Error("node key must look like 'ROLE lemma': '" + std::string(display) + "'");
  }
  auto role = parse_role(display.substr(0, space));
  if (!role) {
    throw Error("unknown grammatical role in node key '" + std::string(display) + "'");
  }
  return NodeKey{std::string(display.substr(space + 1)), *role};
}

std::strong_ordering operator<=>(const NodeKey& a, const NodeKey& b) {
  if (auto c = to_string(a.role) <=> to_string(b.role); c != 0) return c;
  return a.lemma <=> b.lemma;
}

std::size_t NodeKeyHash::operator()(const NodeKey& key) const {
  const std::size_t h = std::hash<std::string>{}(key.lemma);
  return h ^ (static_cast<std::size_t>(key.role) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::int64_t Asn::total_weight() const {
  std::int64_t total = 0;
  for (const auto& [key, info] : edges) total += info.weight;
  return total;
}

std::map<NodeKey, std::int64_t> Asn::in_weights() const {
  std::map<NodeKey, std::int64_t> out;
  for (const auto& [key, info] : nodes) out[key] = 0;
  for (const auto& [key, info] : edges) out[key.second] += info.weight;
  return out;
}

std::map<NodeKey, std::int64_t> Asn::out_weights() const {
  std::map<NodeKey, std::int64_t> out;
  for (const auto& [key, info] : nodes) out[key] = 0;
  for (const auto& [key, info] : edges) out[key.first] += info.weight;
  return out;
}

Asn aggregate(const std::vector<DependencyTree>& trees) {
  Asn asn;
  if (trees.empty()) return asn;
  asn.century = trees.front().century;
  for (const DependencyTree& tree : trees) {
    if (tree.century != asn.century) {
      throw Error("cannot aggregate mixed centuries (" + std::to_string(asn.century) + " and " +
                  std::to_string(tree.century) + ")");
    }
    for (const Token& t : tree.tokens) {
      if (t.missing || !t.role) continue;
      NodeKey key{t.lemma, *t.role};
      asn.nodes[key].frequency += 1;
      if (t.head == 0) continue;
      const Token& head = tree.token(t.head);
      if (head.missing || !head.role) continue;
      EdgeInfo& edge = asn.edges[{NodeKey{head.lemma, *head.role}, std::move(key)}];
      edge.weight += 1;
      edge.rules.insert(t.rule);
      edge.sentences.insert(tree.sentence_id);
    }
  }
  return asn;
}

std::vector<NodeKey> heads(const Asn& asn) {
  const auto in = asn.in_weights();
  const auto out = asn.out_weights();
  std::vector<NodeKey> result;
  for (const auto& [key, w] : in) {
    if (w == 0) result.push_back(key);
  }
  std::stable_sort(result.begin(), result.end(), [&](const NodeKey& a, const NodeKey& b) {
    return out.at(a) > out.at(b);
  });
  return result;
}

Asn induced_subnetwork(const Asn& asn, const NodePredicate& keep_node,
                       const EdgePredicate& keep_edge) {
  Asn sub;
  sub.century = asn.century;
  for (const auto& [key, info] : asn.nodes) {
    if (keep_node(key, info)) sub.nodes.emplace(key, info);
  }
  for (const auto& [key, info] : asn.edges) {
    if (!sub.nodes.contains(key.first) || !sub.nodes.contains(key.second)) continue;
    if (keep_edge(key, info)) sub.edges.emplace(key, info);
  }
  return sub;
}

EdgePredicate edges_with_rules(std::set<PhraseRule> rules) {
  return [rules = std::move(rules)](const EdgeKey&, const EdgeInfo& info) {
    return std::any_of(info.rules.begin(), info.rules.end(),
                       [&](PhraseRule r) { return rules.contains(r); });
  };
}

Asn reversed(const Asn& asn) {
  Asn rev;
  rev.century = asn.century;
  rev.nodes = asn.nodes;
  for (const auto& [key, info] : asn.edges) rev.edges.emplace(EdgeKey{key.second, key.first}, info);
  return rev;
}

Asn with_unit_weights(const Asn& asn) {
  Asn out = asn;
  for (auto& [key, info] : out.edges) info.weight = 1;
  return out;
}

int IndexedGraph::index_of(const NodeKey& key) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return -1;
  return static_cast<int>(it - keys.begin());
}

IndexedGraph index_graph(const Asn& asn) {
  IndexedGraph g;
  g.keys.reserve(asn.nodes.size());
  for (const auto& [key, info] : asn.nodes) g.keys.push_back(key);
  g.arcs.reserve(asn.edges.size());
  for (const auto& [key, info] : asn.edges) {
    g.arcs.push_back({g.index_of(key.first), g.index_of(key.second),
                      static_cast<double>(info.weight)});
  }
  return g;
}

}  // namespace asnkit
