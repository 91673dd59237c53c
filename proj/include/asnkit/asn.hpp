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

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "asnkit/corpus.hpp"
#include "asnkit/roles.hpp"

namespace asnkit {

/// Node identity: a lemma together with its grammatical role, so the same
/// lemma used as auxiliary and as full verb yields two nodes.
struct NodeKey {
  std::string lemma;
  GrammaticalRole role = GrammaticalRole::N;

  /// "ROLE lemma", e.g. "AX werden".
  std::string display() const;
  static NodeKey parse(std::string_view display);

  friend bool operator==(const NodeKey&, const NodeKey&) = default;
  friend std::strong_ordering operator<=>(const NodeKey& a, const NodeKey& b);
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& key) const;
};

using EdgeKey = std::pair<NodeKey, NodeKey>;  // head -> dependent

struct NodeInfo {
  std::int64_t frequency = 0;
  friend bool operator==(const NodeInfo&, const NodeInfo&) = default;
};

struct EdgeInfo {
  std::int64_t weight = 0;
  std::set<PhraseRule> rules;
  std::set<std::string> sentences;
  friend bool operator==(const EdgeInfo&, const EdgeInfo&) = default;
};

/// Aggregated syntactic network of one corpus slice. Ordered containers keep
/// every traversal, export and report deterministic.
struct Asn {
  int century = 0;
  std::map<NodeKey, NodeInfo> nodes;
  std::map<EdgeKey, EdgeInfo> edges;

  std::size_t node_count() const { return nodes.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::int64_t total_weight() const;

  std::map<NodeKey, std::int64_t> in_weights() const;
  std::map<NodeKey, std::int64_t> out_weights() const;

  friend bool operator==(const Asn&, const Asn&) = default;
};

/// Merges trees of a single century. Arcs run head -> dependent and repeated
/// arcs add to the edge weight. Tokens with missing annotations, and arcs
/// touching them, are left out.
Asn aggregate(const std::vector<DependencyTree>& trees);

/// Nodes without in-neighbours, heaviest out-weight first, then by key.
std::vector<NodeKey> heads(const Asn& asn);

using NodePredicate = std::function<bool(const NodeKey&, const NodeInfo&)>;
using EdgePredicate = std::function<bool(const EdgeKey&, const EdgeInfo&)>;

/// Keeps the nodes and edges accepted by the predicates. Edges whose
/// endpoints were dropped go too.
Asn induced_subnetwork(const Asn& asn, const NodePredicate& keep_node,
                       const EdgePredicate& keep_edge);

/// Edge predicate accepting edges that carry at least one of `rules`.
EdgePredicate edges_with_rules(std::set<PhraseRule> rules);

Asn reversed(const Asn& asn);
Asn with_unit_weights(const Asn& asn);

/// Dense integer view used by the numeric modules. Nodes are numbered in key order.
struct IndexedGraph {
  struct Arc {
    int from = 0;
    int to = 0;
    double weight = 1.0;
  };
  std::vector<NodeKey> keys;
  std::vector<Arc> arcs;  // in edge-key order

  int index_of(const NodeKey& key) const;
};

IndexedGraph index_graph(const Asn& asn);

}  // namespace asnkit
