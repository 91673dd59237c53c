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

#include "asnkit/hierarchy.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <deque>
#include <tuple>

#include "asnkit/error.hpp"

namespace asnkit {

namespace {

using SpMat = Eigen::SparseMatrix<double>;

struct LevelSystem {
  SpMat a;
  Eigen::VectorXd b;
};

// Row v: s(v) - sum_u (w(u,v)/w_in(v)) s(u) = 1, or s(v) = pinned for heads.
LevelSystem build_system(std::size_t n, std::span<const IndexedGraph::Arc> arcs,
                         const std::vector<double>& w_in, double pinned_level) {
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(n + arcs.size());
  Eigen::VectorXd b(static_cast<Eigen::Index>(n));
  for (std::size_t v = 0; v < n; ++v) {
    triplets.emplace_back(static_cast<int>(v), static_cast<int>(v), 1.0);
    b[static_cast<Eigen::Index>(v)] = w_in[v] > 0.0 ? 1.0 : pinned_level;
  }
  for (const auto& arc : arcs) {
    triplets.emplace_back(arc.to, arc.from, -arc.weight / w_in[static_cast<std::size_t>(arc.to)]);
  }
  LevelSystem sys;
  sys.a.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  sys.a.setFromTriplets(triplets.begin(), triplets.end());
  sys.a.makeCompressed();
  sys.b = std::move(b);
  return sys;
}

std::vector<int> topological_order(std::size_t n, std::span<const IndexedGraph::Arc> arcs,
                                   const std::vector<std::vector<int>>& out_arcs) {
  std::vector<int> indegree(n, 0);
  for (const auto& arc : arcs) ++indegree[static_cast<std::size_t>(arc.to)];
  std::deque<int> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(static_cast<int>(v));
  }
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int u = ready.front();
    ready.pop_front();
    order.push_back(u);
    for (int ai : out_arcs[static_cast<std::size_t>(u)]) {
      const int v = arcs[static_cast<std::size_t>(ai)].to;
      if (--indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    }
  }
  return order;  // shorter than n when a cycle exists
}

bool all_reachable_from_heads(std::size_t n, std::span<const IndexedGraph::Arc> arcs,
                              const std::vector<std::vector<int>>& out_arcs,
                              const std::vector<double>& w_in) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (std::size_t v = 0; v < n; ++v) {
    if (w_in[v] == 0.0) {
      seen[v] = 1;
      stack.push_back(static_cast<int>(v));
    }
  }
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int ai : out_arcs[static_cast<std::size_t>(u)]) {
      const auto v = static_cast<std::size_t>(arcs[static_cast<std::size_t>(ai)].to);
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(static_cast<int>(v));
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// CGLS from x = 0. Iterates stay in range(A^T), so the limit is the
// minimum-norm least-squares solution even for inconsistent systems.
Eigen::VectorXd cgls(const SpMat& a, const Eigen::VectorXd& b, int max_iter, int* iterations) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(a.cols());
  Eigen::VectorXd r = b;
  Eigen::VectorXd s = a.transpose() * r;
  Eigen::VectorXd p = s;
  double gamma = s.squaredNorm();
  const double stop = 1e-14 * std::sqrt(gamma);
  int it = 0;
  for (; it < max_iter && gamma > 0.0; ++it) {
    const Eigen::VectorXd q = a * p;
    const double qq = q.squaredNorm();
    if (qq == 0.0) break;
    const double step = gamma / qq;
    x += step * p;
    r -= step * q;
    s = a.transpose() * r;
    const double next = s.squaredNorm();
    if (std::sqrt(next) <= stop) {
      ++it;
      break;
    }
    p = s + (next / gamma) * p;
    gamma = next;
  }
  *iterations = it;
  return x;
}

}  // namespace

LevelSolution solve_levels(std::size_t n, std::span<const IndexedGraph::Arc> arcs,
                           const LevelOptions& options) {
  LevelSolution sol;
  if (n == 0) return sol;

  std::vector<double> w_in(n, 0.0);
  std::vector<std::vector<int>> out_arcs(n);
  std::vector<std::vector<int>> in_arcs(n);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& arc = arcs[i];
    if (arc.from < 0 || arc.to < 0 || static_cast<std::size_t>(arc.from) >= n ||
        static_cast<std::size_t>(arc.to) >= n) {
      throw Error("arc endpoint out of range");
    }
    if (!(arc.weight > 0.0) || !std::isfinite(arc.weight)) {
      throw Error("arc weights must be positive and finite");
    }
    w_in[static_cast<std::size_t>(arc.to)] += arc.weight;
    out_arcs[static_cast<std::size_t>(arc.from)].push_back(static_cast<int>(i));
    in_arcs[static_cast<std::size_t>(arc.to)].push_back(static_cast<int>(i));
  }

  const LevelSystem sys = build_system(n, arcs, w_in, options.pinned_level);
  Eigen::VectorXd s(static_cast<Eigen::Index>(n));

  const std::vector<int> order = topological_order(n, arcs, out_arcs);
  if (order.size() == n) {
    for (int v : order) {
      const auto vi = static_cast<std::size_t>(v);
      if (w_in[vi] == 0.0) {
        s[v] = options.pinned_level;
        continue;
      }
      double acc = 0.0;
      for (int ai : in_arcs[vi]) {
        const auto& arc = arcs[static_cast<std::size_t>(ai)];
        acc += arc.weight * s[arc.from];
      }
      s[v] = 1.0 + acc / w_in[vi];
    }
  } else if (all_reachable_from_heads(n, arcs, out_arcs, w_in)) {
    Eigen::SparseLU<SpMat> lu;
    lu.compute(sys.a);
    if (lu.info() != Eigen::Success) throw Error("level system factorization failed");
    s = lu.solve(sys.b);
  } else {
    s = cgls(sys.a, sys.b, 10 * static_cast<int>(n) + 100, &sol.iterations);
  }

  sol.residual = (sys.a * s - sys.b).norm();
  if (options.shift_to_zero) s.array() -= s.minCoeff();
  sol.level.assign(s.data(), s.data() + s.size());
  return sol;
}

namespace {

std::map<NodeKey, double> levels_by_key(const Asn& asn, double* residual) {
  const IndexedGraph g = index_graph(asn);
  const LevelSolution sol = solve_levels(g.keys.size(), g.arcs);
  if (residual) *residual = sol.residual;
  std::map<NodeKey, double> out;
  for (std::size_t i = 0; i < g.keys.size(); ++i) out.emplace(g.keys[i], sol.level[i]);
  return out;
}

}  // namespace

std::map<NodeKey, double> forward_levels(const Asn& asn, double* residual) {
  return levels_by_key(asn, residual);
}

std::map<NodeKey, double> backward_levels(const Asn& asn, double* residual) {
  return levels_by_key(reversed(asn), residual);
}

HierarchyLevels hierarchy_levels(const Asn& asn) {
  HierarchyLevels out;
  out.forward = forward_levels(asn, &out.forward_residual);
  out.backward = backward_levels(asn, &out.backward_residual);
  return out;
}

HierarchyStats hierarchy_stats(const Asn& asn, const std::map<NodeKey, double>& levels) {
  if (asn.edges.empty()) throw Error("hierarchy statistics are undefined on edgeless graph");
  HierarchyStats stats;
  double total = 0.0;
  double sum = 0.0;
  for (const auto& [key, info] : asn.edges) {
    const double h = levels.at(key.second) - levels.at(key.first);
    stats.edge_differences.emplace(key, h);
    const auto w = static_cast<double>(info.weight);
    total += w;
    sum += w * h;
  }
  const double mean = sum / total;
  double var = 0.0;
  for (const auto& [key, info] : asn.edges) {
    const double d = stats.edge_differences.at(key) - mean;
    var += static_cast<double>(info.weight) * d * d;
  }
  stats.mean_difference = mean;
  stats.democracy = 1.0 - mean;
  stats.incoherence = var / total;
  return stats;
}

std::vector<RankedNode> influence_ranking(const Asn& asn,
                                          const std::map<NodeKey, double>& levels) {
  const auto out = asn.out_weights();
  std::vector<RankedNode> ranked;
  ranked.reserve(asn.nodes.size());
  for (const auto& [key, info] : asn.nodes) ranked.push_back({key, levels.at(key), out.at(key)});
  auto bucket = [](double level) { return std::llround(level * 1e9); };
  std::sort(ranked.begin(), ranked.end(), [&](const RankedNode& a, const RankedNode& b) {
    return std::forward_as_tuple(bucket(a.level), b.out_weight, a.key) <
           std::forward_as_tuple(bucket(b.level), a.out_weight, b.key);
  });
  return ranked;
}

std::vector<HistogramBin> level_histogram(std::span<const double> levels, double bin_width) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw Error("histogram bin width must be positive");
  }
  std::map<std::int64_t, std::int64_t> bins;
  for (double level : levels) {
    const auto idx = static_cast<std::int64_t>(std::floor(level / bin_width + 1e-9));
    ++bins[idx];
  }
  std::vector<HistogramBin> out;
  out.reserve(bins.size());
  for (const auto& [idx, count] : bins) {
    out.push_back({static_cast<double>(idx) * bin_width, count});
  }
  return out;
}

std::vector<HistogramBin> level_histogram(const std::map<NodeKey, double>& levels,
                                          double bin_width) {
  std::vector<double> values;
  values.reserve(levels.size());
  for (const auto& [key, level] : levels) values.push_back(level);
  return level_histogram(values, bin_width);
}

}  // namespace asnkit
