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
#include <map>
#include <span>
#include <vector>

#include "asnkit/asn.hpp"

namespace asnkit {

/// Forward hierarchical levels on a weighted digraph.
///
/// A node with weighted in-degree w_in(v) > 0 sits one level below the
/// weight-averaged level of its in-neighbours:
///
///     s(v) = 1 + sum_{u->v} w(u,v) s(u) / w_in(v)
///
/// and nodes without in-neighbours (heads) are pinned. The system is solved
/// in the least-squares sense; when it is singular (a cycle nobody upstream
/// feeds into) the minimum-norm solution is taken. Levels are finally
/// shifted so that the smallest is 0, which puts heads on top and lets
/// levels grow downward.
///
/// Three routes, picked per graph:
///   - acyclic: topological evaluation, exact on layered graphs and trees;
///   - cyclic but every node reachable from a head: sparse LU (unique);
///   - otherwise: CGLS started from zero, which converges to the
///     minimum-norm least-squares solution.
struct LevelSolution {
  std::vector<double> level;  // indexed like the input nodes
  double residual = 0.0;      // ||A s - b|| before the final shift
  int iterations = 0;         // CGLS iterations, 0 on the direct routes
};

struct LevelOptions {
  double pinned_level = 0.0;  // value imposed on heads before the shift
  bool shift_to_zero = true;
};

LevelSolution solve_levels(std::size_t node_count, std::span<const IndexedGraph::Arc> arcs,
                           const LevelOptions& options = {});

struct HierarchyLevels {
  std::map<NodeKey, double> forward;
  std::map<NodeKey, double> backward;
  double forward_residual = 0.0;
  double backward_residual = 0.0;
};

std::map<NodeKey, double> forward_levels(const Asn& asn, double* residual = nullptr);
/// Forward levels of the edge-reversed network.
std::map<NodeKey, double> backward_levels(const Asn& asn, double* residual = nullptr);
HierarchyLevels hierarchy_levels(const Asn& asn);

struct HierarchyStats {
  double incoherence = 0.0;  // weighted population variance of edge differences
  double democracy = 0.0;    // 1 - weighted mean of edge differences
  double mean_difference = 0.0;
  std::map<EdgeKey, double> edge_differences;  // s(dependent) - s(head)
};

/// Throws Error on a network without edges.
HierarchyStats hierarchy_stats(const Asn& asn, const std::map<NodeKey, double>& levels);

struct RankedNode {
  NodeKey key;
  double level = 0.0;
  std::int64_t out_weight = 0;
};

/// Top of the hierarchy first: ascending level, then heavier out-weight,
/// then key order. Levels closer than 1e-9 count as tied.
std::vector<RankedNode> influence_ranking(const Asn& asn, const std::map<NodeKey, double>& levels);

struct HistogramBin {
  double lower = 0.0;
  std::int64_t count = 0;
};

/// Left-closed bins of `bin_width` anchored at 0. Values within 1e-9 below a
/// bin edge are counted in the upper bin, so solver round-off does not
/// move integer levels down a bin.
std::vector<HistogramBin> level_histogram(std::span<const double> levels, double bin_width);
std::vector<HistogramBin> level_histogram(const std::map<NodeKey, double>& levels,
                                          double bin_width);

}  // namespace asnkit
