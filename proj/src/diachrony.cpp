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

#include "asnkit/diachrony.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "asnkit/error.hpp"

namespace asnkit {

DiachronicSlice DiachronicSlice::build(Asn asn) {
  auto forward = forward_levels(asn);
  return build(std::move(asn), std::move(forward));
}

DiachronicSlice DiachronicSlice::build(Asn asn, std::map<NodeKey, double> forward) {
  DiachronicSlice slice;
  slice.century = asn.century;
  const auto ranking = influence_ranking(asn, forward);
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    slice.rank.emplace(ranking[i].key, static_cast<int>(i + 1));
  }
  slice.asn = std::move(asn);
  slice.forward = std::move(forward);
  return slice;
}

namespace {

void check_order(std::span<const DiachronicSlice> slices) {
  for (std::size_t i = 1; i < slices.size(); ++i) {
    if (slices[i].century <= slices[i - 1].century) {
      throw Error("slices must be in strictly increasing century order");
    }
  }
}

std::optional<int> rank_in(const DiachronicSlice& slice, const NodeKey& key) {
  auto it = slice.rank.find(key);
  if (it == slice.rank.end()) return std::nullopt;
  return it->second;
}

}  // namespace

std::vector<HeadTrajectory> track(std::span<const NodeKey> keys,
                                  std::span<const DiachronicSlice> slices) {
  check_order(slices);
  std::vector<HeadTrajectory> out;
  out.reserve(keys.size());
  for (const NodeKey& key : keys) {
    HeadTrajectory traj{key, {}};
    for (const DiachronicSlice& slice : slices) {
      TrajectoryRow row;
      row.century = slice.century;
      auto node = slice.asn.nodes.find(key);
      if (node != slice.asn.nodes.end()) {
        row.present = true;
        row.forward_level = slice.forward.at(key);
        row.level_rank = slice.rank.at(key);
        row.frequency = node->second.frequency;
        row.is_head = std::none_of(slice.asn.edges.begin(), slice.asn.edges.end(),
                                   [&](const auto& e) { return e.first.second == key; });
      }
      traj.rows.push_back(row);
    }
    out.push_back(std::move(traj));
  }
  return out;
}

std::vector<EmergentHead> detect_emergent_heads(std::span<const DiachronicSlice> slices,
                                                const EmergenceOptions& options) {
  if (options.band < 1) throw Error("emergence band must be at least 1");
  check_order(slices);
  std::set<NodeKey> keys;
  for (const DiachronicSlice& slice : slices) {
    for (const auto& [key, info] : slice.asn.nodes) keys.insert(key);
  }
  std::vector<EmergentHead> events;
  for (const NodeKey& key : keys) {
    for (std::size_t i = 0; i < slices.size(); ++i) {
      const auto rank = rank_in(slices[i], key);
      if (!rank || *rank > options.band) continue;
      if (i == 0) {
        if (options.flag_initial) events.push_back({key, slices[i].century, std::nullopt, *rank});
      } else {
        const auto prior = rank_in(slices[i - 1], key);
        if (!prior || *prior >= options.band + options.min_gain) {
          events.push_back({key, slices[i].century, prior, *rank});
        }
      }
      break;  // only the first entry into the band is considered
    }
  }
  std::sort(events.begin(), events.end(), [](const EmergentHead& a, const EmergentHead& b) {
    return std::tie(a.century, a.new_rank, a.key) < std::tie(b.century, b.new_rank, b.key);
  });
  return events;
}

void DiachronicSeries::add(SeriesEntry entry) {
  if (!entries_.empty() && entry.century <= entries_.back().century) {
    throw Error("series centuries must be strictly increasing");
  }
  entries_.push_back(std::move(entry));
}

std::vector<PhasePoint> phase_space(const DiachronicSeries& series) {
  std::vector<PhasePoint> out;
  for (const SeriesEntry& e : series.entries()) {
    if (!e.hierarchy) {
      throw Error("century " + std::to_string(e.century) + " has no hierarchy statistics");
    }
    out.push_back({e.century, e.hierarchy->democracy, e.hierarchy->incoherence});
  }
  return out;
}

}  // namespace asnkit
