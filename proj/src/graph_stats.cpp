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

#include "asnkit/graph_stats.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "asnkit/error.hpp"

namespace asnkit {

namespace {

std::vector<std::vector<int>> undirected_adjacency(std::size_t n,
                                                   std::span<const std::pair<int, int>> edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw Error("edge endpoint out of range");
    }
    if (u == v) continue;
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

// Unweighted BFS distances from `source`; -1 marks unreachable nodes.
std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int source) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

NetworkSummary summarize_graph(std::size_t n, std::span<const std::pair<int, int>> edges) {
  if (n == 0) throw Error("cannot summarize an empty graph");
  const auto adj = undirected_adjacency(n, edges);
  NetworkSummary s;
  s.node_count = static_cast<std::int64_t>(n);
  s.edge_count = static_cast<std::int64_t>(edges.size());
  std::int64_t degree_sum = 0;
  for (const auto& list : adj) degree_sum += static_cast<std::int64_t>(list.size());
  s.undirected_edge_count = degree_sum / 2;
  s.average_degree = static_cast<double>(degree_sum) / static_cast<double>(n);

  double clustering_sum = 0.0;
  std::vector<char> mark(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    const auto& nb = adj[u];
    const std::size_t d = nb.size();
    if (d < 2) continue;
    for (int v : nb) mark[static_cast<std::size_t>(v)] = 1;
    std::int64_t links = 0;
    for (int v : nb) {
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (mark[static_cast<std::size_t>(w)]) ++links;
      }
    }
    for (int v : nb) mark[static_cast<std::size_t>(v)] = 0;
    // each neighbour pair is seen twice
    clustering_sum += static_cast<double>(links) / static_cast<double>(d * (d - 1));
  }
  s.clustering = clustering_sum / static_cast<double>(n);

  // Weak components; ties on size go to the component with the smallest node.
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> members;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    const auto dist = bfs(adj, static_cast<int>(start));
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] >= 0) {
        component[v] = id;
        members.back().push_back(static_cast<int>(v));
      }
    }
  }
  s.component_count = static_cast<std::int64_t>(members.size());
  std::size_t largest = 0;
  for (std::size_t c = 1; c < members.size(); ++c) {
    if (members[c].size() > members[largest].size()) largest = c;
  }
  const auto& lcc = members[largest];
  s.lcc_size = static_cast<std::int64_t>(lcc.size());
  s.lcc_fraction = static_cast<double>(lcc.size()) / static_cast<double>(n);

  std::int64_t distance_sum = 0;
  int diameter = 0;
  for (int source : lcc) {
    const auto dist = bfs(adj, source);
    for (int v : lcc) {
      distance_sum += dist[static_cast<std::size_t>(v)];
      diameter = std::max(diameter, dist[static_cast<std::size_t>(v)]);
    }
  }
  const auto pairs = static_cast<double>(lcc.size()) * static_cast<double>(lcc.size() - 1);
  s.average_path_length = pairs > 0 ? static_cast<double>(distance_sum) / pairs : 0.0;
  s.diameter = diameter;
  return s;
}

NetworkSummary summarize(const Asn& asn) {
  const IndexedGraph g = index_graph(asn);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.arcs.size());
  for (const auto& arc : g.arcs) edges.emplace_back(arc.from, arc.to);
  return summarize_graph(g.keys.size(), edges);
}

std::vector<DepthDiameterRow> depth_vs_diameter(const std::vector<CorpusSlice>& slices,
                                                const std::vector<Asn>& networks) {
  if (slices.size() != networks.size()) {
    throw Error("depth_vs_diameter needs one network per slice");
  }
  std::vector<DepthDiameterRow> rows;
  rows.reserve(slices.size());
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const CorpusSlice& slice = slices[i];
    if (slice.trees.empty()) {
      throw Error("century " + std::to_string(slice.century) + " has no sentences");
    }
    DepthDiameterRow row;
    row.century = slice.century;
    for (const DependencyTree& t : slice.trees) {
      row.max_tree_depth = std::max(row.max_tree_depth, tree_depth(t));
    }
    const NetworkSummary s = summarize(networks[i]);
    row.diameter = s.diameter;
    row.average_path_length = s.average_path_length;
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.century < b.century; });
  return rows;
}

DegreeSequences degree_sequences(const Asn& asn) {
  std::map<NodeKey, std::int64_t> in;
  std::map<NodeKey, std::int64_t> out;
  for (const auto& [key, info] : asn.nodes) {
    in[key] = 0;
    out[key] = 0;
  }
  for (const auto& [key, info] : asn.edges) {
    ++out[key.first];
    ++in[key.second];
  }
  DegreeSequences seq;
  for (const auto& [key, info] : asn.nodes) {
    seq.in.push_back(in[key]);
    seq.out.push_back(out[key]);
    seq.total.push_back(in[key] + out[key]);
  }
  return seq;
}

std::string_view to_string(DegreeVariable variable) {
  switch (variable) {
    case DegreeVariable::kIn: return "in";
    case DegreeVariable::kOut: return "out";
    case DegreeVariable::kTotal: return "total";
  }
  return "?";
}

std::optional<DegreeVariable> parse_degree_variable(std::string_view text) {
  if (text == "in") return DegreeVariable::kIn;
  if (text == "out") return DegreeVariable::kOut;
  if (text == "total") return DegreeVariable::kTotal;
  return std::nullopt;
}

const std::vector<std::int64_t>& select(const DegreeSequences& seq, DegreeVariable variable) {
  switch (variable) {
    case DegreeVariable::kIn: return seq.in;
    case DegreeVariable::kOut: return seq.out;
    case DegreeVariable::kTotal: break;
  }
  return seq.total;
}

}  // namespace asnkit
