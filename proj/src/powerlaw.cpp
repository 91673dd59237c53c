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

#include "asnkit/powerlaw.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <thread>

#include "asnkit/error.hpp"

namespace asnkit {

namespace {

// B_{2j} / (2j)! for j = 1..7.
constexpr std::array<double, 7> kEulerMaclaurin = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
};

constexpr double kDirectCutoff = 12.0;

}  // namespace

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) throw Error("hurwitz_zeta needs s > 1 and q > 0");
  double sum = 0.0;
  double a = q;
  while (a < kDirectCutoff) {
    sum += std::pow(a, -s);
    a += 1.0;
  }
  const double a_neg_s = std::exp(-s * std::log(a));
  double tail = a * a_neg_s / (s - 1.0) + 0.5 * a_neg_s;
  // term_j = c_j * s(s+1)...(s+2j-2) * a^(-s-2j+1)
  double factor = s * a_neg_s / a;
  const double inv_a2 = 1.0 / (a * a);
  for (std::size_t j = 0; j < kEulerMaclaurin.size(); ++j) {
    tail += kEulerMaclaurin[j] * factor;
    const double k = static_cast<double>(2 * j + 1);
    factor *= (s + k) * (s + k + 1.0) * inv_a2;
  }
  return sum + tail;
}

namespace {

// Distinct values with counts, plus suffix aggregates per candidate cutoff.
struct Histogram {
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> counts;
  std::vector<std::int64_t> tail_count;  // observations >= values[i]
  std::vector<double> tail_log_sum;      // sum of ln x over those observations
  std::int64_t n = 0;
};

Histogram make_histogram(std::span<const std::int64_t> data) {
  std::vector<std::int64_t> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());
  Histogram h;
  h.n = static_cast<std::int64_t>(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    h.values.push_back(sorted[i]);
    h.counts.push_back(static_cast<std::int64_t>(j - i));
    i = j;
  }
  const std::size_t d = h.values.size();
  h.tail_count.assign(d + 1, 0);
  h.tail_log_sum.assign(d + 1, 0.0);
  for (std::size_t i = d; i-- > 0;) {
    h.tail_count[i] = h.tail_count[i + 1] + h.counts[i];
    h.tail_log_sum[i] = h.tail_log_sum[i + 1] +
                        static_cast<double>(h.counts[i]) * std::log(static_cast<double>(h.values[i]));
  }
  return h;
}

double tail_log_likelihood(double alpha, double xmin, std::int64_t n_tail, double log_sum) {
  return -static_cast<double>(n_tail) * std::log(hurwitz_zeta(alpha, xmin)) - alpha * log_sum;
}

// Golden-section search for the maximum of a unimodal function on [lo, hi].
double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// KS distance of the tail starting at histogram entry `first`. Between two
// observed values the empirical CDF is flat and the model CDF rises, so the
// largest gap sits at an observed value or one below the next observed value.
double tail_ks(const Histogram& h, std::size_t first, double alpha) {
  const double xmin = static_cast<double>(h.values[first]);
  const double norm = hurwitz_zeta(alpha, xmin);
  const auto n_tail = static_cast<double>(h.tail_count[first]);
  double cum = 0.0;
  double worst = 0.0;
  const std::size_t d = h.values.size();
  for (std::size_t j = first; j < d; ++j) {
    cum += static_cast<double>(h.counts[j]);
    const double emp = cum / n_tail;
    const auto x = static_cast<double>(h.values[j]);
    worst = std::max(worst, std::abs(emp - (1.0 - hurwitz_zeta(alpha, x + 1.0) / norm)));
    if (j + 1 < d && h.values[j + 1] - 1 > h.values[j]) {
      const auto next = static_cast<double>(h.values[j + 1]);
      worst = std::max(worst, std::abs(emp - (1.0 - hurwitz_zeta(alpha, next) / norm)));
    }
  }
  return worst;
}

void check_data(std::span<const std::int64_t> data) {
  if (data.size() < 10) {
    throw Error("power-law fit needs at least 10 observations, got " +
                std::to_string(data.size()));
  }
  for (std::int64_t x : data) {
    if (x < 1) throw Error("power-law fit needs positive integers, got " + std::to_string(x));
  }
}

}  // namespace

double powerlaw_log_likelihood(std::span<const std::int64_t> data, double alpha,
                               std::int64_t xmin) {
  std::int64_t n_tail = 0;
  double log_sum = 0.0;
  for (std::int64_t x : data) {
    if (x >= xmin) {
      ++n_tail;
      log_sum += std::log(static_cast<double>(x));
    }
  }
  return tail_log_likelihood(alpha, static_cast<double>(xmin), n_tail, log_sum);
}

double ks_distance(std::span<const std::int64_t> data, double alpha, std::int64_t xmin) {
  const Histogram h = make_histogram(data);
  auto it = std::lower_bound(h.values.begin(), h.values.end(), xmin);
  if (it == h.values.end()) throw Error("no observations at or above xmin");
  if (*it != xmin) {
    // Tail starts above xmin: evaluate on a histogram that has xmin as its
    // first support point with zero count.
    Histogram shifted;
    shifted.values.push_back(xmin);
    shifted.counts.push_back(0);
    for (auto jt = it; jt != h.values.end(); ++jt) {
      shifted.values.push_back(*jt);
      shifted.counts.push_back(h.counts[static_cast<std::size_t>(jt - h.values.begin())]);
    }
    shifted.tail_count = {h.tail_count[static_cast<std::size_t>(it - h.values.begin())]};
    return tail_ks(shifted, 0, alpha);
  }
  return tail_ks(h, static_cast<std::size_t>(it - h.values.begin()), alpha);
}

PowerLawFit fit_powerlaw(std::span<const std::int64_t> data) {
  check_data(data);
  const Histogram h = make_histogram(data);
  if (h.values.size() < 2) throw Error("degenerate data: all observations are equal");

  PowerLawFit best;
  best.ks = std::numeric_limits<double>::infinity();
  best.n = h.n;
  for (std::size_t i = 0; i + 1 < h.values.size(); ++i) {
    const std::int64_t n_tail = h.tail_count[i];
    if (n_tail < kMinTail) break;
    const auto xmin = static_cast<double>(h.values[i]);
    const double log_sum = h.tail_log_sum[i];
    const double alpha = golden_max(
        [&](double a) { return tail_log_likelihood(a, xmin, n_tail, log_sum); }, kAlphaLower,
        kAlphaUpper, kAlphaTolerance);
    const double ks = tail_ks(h, i, alpha);
    if (ks < best.ks) {
      best.alpha = alpha;
      best.xmin = h.values[i];
      best.ks = ks;
      best.n_tail = n_tail;
    }
  }
  return best;
}

DiscretePowerLaw::DiscretePowerLaw(double alpha, std::int64_t xmin)
    : alpha_(alpha), xmin_(xmin) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) throw Error("power-law alpha must exceed 1");
  if (xmin < 1) throw Error("power-law xmin must be at least 1");
  norm_ = hurwitz_zeta(alpha, static_cast<double>(xmin));
  constexpr std::size_t kMaxTable = std::size_t{1} << 20;
  constexpr double kTailMass = 1e-9;
  double sum = 0.0;
  double carry = 0.0;  // Kahan compensation
  for (std::size_t k = 0; k < kMaxTable; ++k) {
    const double term = std::pow(static_cast<double>(xmin) + static_cast<double>(k), -alpha) / norm_;
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    table_.push_back(sum);
    if (1.0 - sum < kTailMass && (k & 1023) == 1023) {
      // confirm against the exact tail before stopping
      const double exact_tail =
          hurwitz_zeta(alpha, static_cast<double>(xmin) + static_cast<double>(k) + 1.0) / norm_;
      if (exact_tail < kTailMass) break;
    }
  }
}

double DiscretePowerLaw::cdf(std::int64_t x) const {
  if (x < xmin_) return 0.0;
  return 1.0 - hurwitz_zeta(alpha_, static_cast<double>(x) + 1.0) / norm_;
}

std::int64_t DiscretePowerLaw::operator()(Rng& rng) const {
  const double u = rng.uniform();
  if (u < table_.back()) {
    const auto it = std::upper_bound(table_.begin(), table_.end(), u);
    return xmin_ + static_cast<std::int64_t>(it - table_.begin());
  }
  return tail_search(1.0 - u);
}

// Smallest x beyond the table with P(X > x) < survival.
std::int64_t DiscretePowerLaw::tail_search(double survival) const {
  constexpr auto kCap = std::int64_t{1} << 53;
  const double target = survival * norm_;
  auto above = [&](std::int64_t x) {  // P(X > x) * norm >= target
    return hurwitz_zeta(alpha_, static_cast<double>(x) + 1.0) >= target;
  };
  std::int64_t lo = xmin_ + static_cast<std::int64_t>(table_.size()) - 1;
  if (!above(lo)) return lo;
  std::int64_t hi = lo;
  while (above(hi)) {
    lo = hi;
    if (hi >= kCap / 2) return kCap;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (above(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

std::vector<std::int64_t> sample_discrete_powerlaw(double alpha, std::int64_t xmin,
                                                   std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw Error("sample size must be at least 1");
  const DiscretePowerLaw dist(alpha, xmin);
  Rng rng(seed);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n));
  for (auto& x : out) x = dist(rng);
  return out;
}

PowerLawFit bootstrap_pvalue(const PowerLawFit& fit, std::span<const std::int64_t> data,
                             int replicates, std::uint64_t seed, unsigned threads) {
  if (replicates < 100) throw Error("bootstrap needs at least 100 replicates");
  check_data(data);
  std::vector<std::int64_t> below;
  std::int64_t n_tail = 0;
  for (std::int64_t x : data) {
    if (x >= fit.xmin) {
      ++n_tail;
    } else {
      below.push_back(x);
    }
  }
  if (n_tail == 0) throw Error("fit has an empty tail on this data");
  const auto n = static_cast<std::int64_t>(data.size());
  const double tail_share = static_cast<double>(n_tail) / static_cast<double>(n);
  const DiscretePowerLaw model(fit.alpha, fit.xmin);

  std::vector<double> ks(static_cast<std::size_t>(replicates),
                         std::numeric_limits<double>::quiet_NaN());
  auto run = [&](int r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<std::int64_t> synthetic(static_cast<std::size_t>(n));
    for (auto& x : synthetic) {
      if (below.empty() || rng.uniform() < tail_share) {
        x = model(rng);
      } else {
        x = below[rng.below(below.size())];
      }
    }
    try {
      ks[static_cast<std::size_t>(r)] = fit_powerlaw(synthetic).ks;
    } catch (const Error&) {
      // discarded; stays NaN
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(replicates));
  if (workers <= 1) {
    for (int r = 0; r < replicates; ++r) run(r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int r = next++; r < replicates; r = next++) run(r);
      });
    }
  }

  int discarded = 0;
  int at_least = 0;
  for (double value : ks) {
    if (std::isnan(value)) {
      ++discarded;
    } else if (value >= fit.ks) {
      ++at_least;
    }
  }
  if (discarded * 10 > replicates) {
    throw Error("bootstrap discarded " + std::to_string(discarded) + " of " +
                std::to_string(replicates) + " replicates");
  }
  PowerLawFit out = fit;
  out.replicates = replicates;
  out.discarded = discarded;
  out.seed = seed;
  out.p_value = static_cast<double>(at_least) / static_cast<double>(replicates - discarded);
  return out;
}

std::string_view to_string(Alternative alternative) {
  switch (alternative) {
    case Alternative::kExponential: return "exponential";
    case Alternative::kLognormal: return "lognormal";
  }
  return "?";
}

std::string_view to_string(Favored favored) {
  switch (favored) {
    case Favored::kPowerLaw: return "powerlaw";
    case Favored::kAlternative: return "alternative";
    case Favored::kIndeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

// ln P(Z > z) for a standard normal, accurate far into the upper tail.
double log_normal_sf(double z) {
  if (z < 30.0) return std::log(0.5 * std::erfc(z / std::numbers::sqrt2));
  const double z2 = z * z;
  return -0.5 * z2 - std::log(z) - 0.5 * std::log(2.0 * std::numbers::pi) +
         std::log1p(-1.0 / z2 + 3.0 / (z2 * z2));
}

// ln(exp(a) - exp(b)) for a > b.
double log_diff_exp(double a, double b) { return a + std::log1p(-std::exp(b - a)); }

// ln P(x <= X < x + 1 | X >= xmin) for X lognormal(mu, sigma).
double discrete_lognormal_log_pmf(double x, double xmin, double mu, double sigma) {
  const double z1 = (std::log(x) - mu) / sigma;
  const double z2 = (std::log(x + 1.0) - mu) / sigma;
  const double zmin = (std::log(xmin) - mu) / sigma;
  double log_mass = 0.0;
  if (z1 > 0.0) {
    log_mass = log_diff_exp(log_normal_sf(z1), log_normal_sf(z2));
  } else {
    // lower half: difference of CDFs, CDF(z) = SF(-z)
    log_mass = log_diff_exp(log_normal_sf(-z2), log_normal_sf(-z1));
  }
  return log_mass - log_normal_sf(zmin);
}

// Nelder-Mead on R^2.
std::array<double, 2> nelder_mead(const std::function<double(const std::array<double, 2>&)>& f,
                                  std::array<double, 2> start, double step) {
  std::array<std::array<double, 2>, 3> p = {start, start, start};
  p[1][0] += step;
  p[2][1] += step;
  std::array<double, 3> fv = {f(p[0]), f(p[1]), f(p[2])};
  for (int it = 0; it < 5000; ++it) {
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    const auto& best = p[idx[0]];
    const auto& worst = p[idx[2]];
    const double spread = std::abs(fv[idx[2]] - fv[idx[0]]);
    const double size = std::max(std::abs(p[idx[2]][0] - best[0]) + std::abs(p[idx[2]][1] - best[1]),
                                 std::abs(p[idx[1]][0] - best[0]) + std::abs(p[idx[1]][1] - best[1]));
    if (spread < 1e-12 * (1.0 + std::abs(fv[idx[0]])) && size < 1e-9) break;
    std::array<double, 2> centroid = {(best[0] + p[idx[1]][0]) / 2.0, (best[1] + p[idx[1]][1]) / 2.0};
    auto along = [&](double t) {
      return std::array<double, 2>{centroid[0] + t * (worst[0] - centroid[0]),
                                   centroid[1] + t * (worst[1] - centroid[1])};
    };
    const auto reflected = along(-1.0);
    const double fr = f(reflected);
    if (fr < fv[idx[0]]) {
      const auto expanded = along(-2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        p[idx[2]] = expanded;
        fv[idx[2]] = fe;
      } else {
        p[idx[2]] = reflected;
        fv[idx[2]] = fr;
      }
    } else if (fr < fv[idx[1]]) {
      p[idx[2]] = reflected;
      fv[idx[2]] = fr;
    } else {
      const bool outside = fr < fv[idx[2]];
      const auto contracted = along(outside ? -0.5 : 0.5);
      const double fc = f(contracted);
      if (fc < (outside ? fr : fv[idx[2]])) {
        p[idx[2]] = contracted;
        fv[idx[2]] = fc;
      } else {
        for (int k : {idx[1], idx[2]}) {
          p[k] = {best[0] + 0.5 * (p[k][0] - best[0]), best[1] + 0.5 * (p[k][1] - best[1])};
          fv[k] = f(p[k]);
        }
      }
    }
  }
  const auto best = std::min_element(fv.begin(), fv.end()) - fv.begin();
  return p[static_cast<std::size_t>(best)];
}

}  // namespace

LrtResult likelihood_ratio_test(std::span<const std::int64_t> data, const PowerLawFit& fit,
                                Alternative alternative) {
  std::vector<double> tail;
  for (std::int64_t x : data) {
    if (x >= fit.xmin) tail.push_back(static_cast<double>(x));
  }
  if (static_cast<std::int64_t>(tail.size()) < kMinTail) {
    throw Error("likelihood ratio test needs at least 10 tail observations, got " +
                std::to_string(tail.size()));
  }
  const auto n = static_cast<double>(tail.size());
  const auto xmin = static_cast<double>(fit.xmin);
  const double log_norm = std::log(hurwitz_zeta(fit.alpha, xmin));

  LrtResult result;
  result.alternative = alternative;
  std::vector<double> alt_ll(tail.size());
  if (alternative == Alternative::kExponential) {
    double mean_excess = 0.0;
    for (double x : tail) mean_excess += x - xmin;
    mean_excess /= n;
    if (mean_excess <= 0.0) throw Error("exponential fit is degenerate on this tail");
    // geometric on {xmin, xmin+1, ...}: P = (1 - e^-l) e^{-l (x - xmin)}
    const double lambda = std::log1p(1.0 / mean_excess);
    const double log_c = std::log(-std::expm1(-lambda));
    for (std::size_t i = 0; i < tail.size(); ++i) alt_ll[i] = log_c - lambda * (tail[i] - xmin);
    result.parameters = {lambda};
  } else {
    double mean = 0.0;
    for (double x : tail) mean += std::log(x);
    mean /= n;
    double var = 0.0;
    for (double x : tail) var += (std::log(x) - mean) * (std::log(x) - mean);
    var /= n;
    const double sd = std::max(std::sqrt(var), 0.05);
    // the likelihood only needs each distinct value once
    std::map<double, double> counts;
    for (double x : tail) counts[x] += 1.0;
    auto neg_ll = [&](const std::array<double, 2>& theta) {
      const double sigma = std::exp(theta[1]);
      double total = 0.0;
      for (const auto& [x, c] : counts) total += c * discrete_lognormal_log_pmf(x, xmin, theta[0], sigma);
      return std::isfinite(total) ? -total : std::numeric_limits<double>::infinity();
    };
    const auto theta = nelder_mead(neg_ll, {mean, std::log(sd)}, 0.5);
    const double sigma = std::exp(theta[1]);
    for (std::size_t i = 0; i < tail.size(); ++i) {
      alt_ll[i] = discrete_lognormal_log_pmf(tail[i], xmin, theta[0], sigma);
    }
    result.parameters = {theta[0], sigma};
  }

  std::vector<double> diff(tail.size());
  double total = 0.0;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    diff[i] = (-fit.alpha * std::log(tail[i]) - log_norm) - alt_ll[i];
    total += diff[i];
  }
  const double mean = total / n;
  double var = 0.0;
  for (double d : diff) var += (d - mean) * (d - mean);
  var /= n;
  result.log_likelihood_ratio = total;
  if (var > 0.0) {
    result.normalized_ratio = total / std::sqrt(n * var);
    result.p_value = std::erfc(std::abs(result.normalized_ratio) / std::numbers::sqrt2);
  } else {
    result.normalized_ratio = 0.0;
    result.p_value = 1.0;
  }
  if (result.p_value <= kLrtSignificance && total != 0.0) {
    result.favored = total > 0.0 ? Favored::kPowerLaw : Favored::kAlternative;
  } else {
    result.favored = Favored::kIndeterminate;
  }
  return result;
}

std::vector<CcdfPoint> ccdf_points(std::span<const std::int64_t> data, const PowerLawFit& fit) {
  const Histogram h = make_histogram(data);
  const auto n = static_cast<double>(h.n);
  const auto xmin = static_cast<double>(fit.xmin);
  const double norm = hurwitz_zeta(fit.alpha, xmin);
  std::int64_t n_tail = 0;
  for (std::int64_t x : data) n_tail += x >= fit.xmin ? 1 : 0;
  std::vector<CcdfPoint> out;
  for (std::size_t i = 0; i < h.values.size(); ++i) {
    CcdfPoint p;
    p.x = h.values[i];
    p.empirical = static_cast<double>(h.tail_count[i]) / n;
    if (h.values[i] >= fit.xmin) {
      p.fitted = static_cast<double>(n_tail) / n *
                 hurwitz_zeta(fit.alpha, static_cast<double>(h.values[i])) / norm;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace asnkit
