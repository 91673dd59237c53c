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
#include <optional>
#include <span>
#include <vector>

#include "asnkit/asn.hpp"
#include "asnkit/graph_stats.hpp"
#include "asnkit/hierarchy.hpp"
#include "asnkit/powerlaw.hpp"

namespace asnkit {

/// One century's network with its forward levels and the derived rank table.
struct DiachronicSlice {
  int century = 0;
  Asn asn;
  std::map<NodeKey, double> forward;
  std::map<NodeKey, int> rank;  // 1 = top of the influence ranking

  static DiachronicSlice build(Asn asn);
  static DiachronicSlice build(Asn asn, std::map<NodeKey, double> forward);
};

struct TrajectoryRow {
  int century = 0;
  bool present = false;
  std::optional<double> forward_level;
  std::optional<int> level_rank;
  std::optional<std::int64_t> frequency;
  bool is_head = false;
};

struct HeadTrajectory {
  NodeKey key;
  std::vector<TrajectoryRow> rows;
};

/// One trajectory per key; keys absent from a slice get a row with present = false.
/// Throws Error when slices are not in strictly increasing century order.
std::vector<HeadTrajectory> track(std::span<const NodeKey> keys,
                                  std::span<const DiachronicSlice> slices);

struct EmergenceOptions {
  int band = 10;      // top-k ranks
  int min_gain = 5;   // previous rank must be >= band + min_gain (or absent)
  bool flag_initial = false;  // whether entering the band in the first slice counts
};

struct EmergentHead {
  NodeKey key;
  int century = 0;
  std::optional<int> prior_rank;  // rank in the preceding slice, absent if not present
  int new_rank = 0;
};

/// For every key, looks at the first slice where its rank enters the top band
/// and flags it when the preceding slice had it absent or ranked at least
/// band + min_gain. The first slice has no predecessor and is only flagged
/// with `flag_initial`. Sorted by century, then new rank, then key.
std::vector<EmergentHead> detect_emergent_heads(std::span<const DiachronicSlice> slices,
                                                const EmergenceOptions& options = {});

struct SeriesEntry {
  int century = 0;
  NetworkSummary summary;
  std::optional<HierarchyStats> hierarchy;
  std::optional<PowerLawFit> fit;
};

class DiachronicSeries {
 public:
  /// Throws Error unless `entry.century` exceeds the last century added.
  void add(SeriesEntry entry);
  const std::vector<SeriesEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<SeriesEntry> entries_;
};

struct PhasePoint {
  int century = 0;
  double democracy = 0.0;
  double incoherence = 0.0;
};

/// Throws Error when an entry has no hierarchy statistics.
std::vector<PhasePoint> phase_space(const DiachronicSeries& series);

}  // namespace asnkit
