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

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "asnkit/asn.hpp"
#include "asnkit/corpus.hpp"

namespace asnkit {

/// Path metrics are measured on the undirected simple projection of the
/// largest weakly connected component, ignoring weights.
inline constexpr std::string_view kPathConventions = "paths: undirected,unweighted,LCC";

struct NetworkSummary {
  std::int64_t node_count = 0;
  std::int64_t edge_count = 0;             // directed edges of the network
  std::int64_t undirected_edge_count = 0;  // simple projection, self loops dropped
  double average_degree = 0.0;             // 2 * undirected_edge_count / node_count
  double clustering = 0.0;                 // mean local clustering, degree < 2 counts 0
  double average_path_length = 0.0;
  std::int64_t diameter = 0;
  std::int64_t component_count = 0;
  std::int64_t lcc_size = 0;
  double lcc_fraction = 0.0;
};

/// Summary of an arbitrary digraph given as index pairs. Throws Error when
/// node_count is 0.
NetworkSummary summarize_graph(std::size_t node_count,
                               std::span<const std::pair<int, int>> directed_edges);
NetworkSummary summarize(const Asn& asn);

struct DepthDiameterRow {
  int century = 0;
  int max_tree_depth = 0;
  std::int64_t diameter = 0;
  double average_path_length = 0.0;
};

/// One row per slice in ascending century order. `networks[i]` must be the
/// network aggregated from `slices[i]`.
std::vector<DepthDiameterRow> depth_vs_diameter(const std::vector<CorpusSlice>& slices,
                                                const std::vector<Asn>& networks);

struct DegreeSequences {
  std::vector<std::int64_t> in;
  std::vector<std::int64_t> out;
  std::vector<std::int64_t> total;
};

/// Unweighted degrees in node-key order.
DegreeSequences degree_sequences(const Asn& asn);

enum class DegreeVariable { kIn, kOut, kTotal };
std::string_view to_string(DegreeVariable variable);
std::optional<DegreeVariable> parse_degree_variable(std::string_view text);
const std::vector<std::int64_t>& select(const DegreeSequences& seq, DegreeVariable variable);

}  // namespace asnkit
