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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "asnkit/rng.hpp"

namespace asnkit {

/// Hurwitz zeta sum_{k>=0} (q+k)^-s for s > 1, q > 0. Direct summation up to
/// q + k >= 12, then an Euler-Maclaurin tail; relative error below 1e-12 on
/// the range the fitter uses.
double hurwitz_zeta(double s, double q);

/// Discrete power law P(X = x) = x^-alpha / zeta(alpha, xmin), x >= xmin.
struct PowerLawFit {
  double alpha = 0.0;
  std::int64_t xmin = 1;
  double ks = 0.0;  // KS distance on the tail
  std::int64_t n_tail = 0;
  std::int64_t n = 0;
  std::optional<double> p_value;  // set by bootstrap_pvalue
  int replicates = 0;
  int discarded = 0;
  std::uint64_t seed = 0;
};

inline constexpr double kAlphaLower = 1.01;
inline constexpr double kAlphaUpper = 6.0;
inline constexpr double kAlphaTolerance = 1e-6;
inline constexpr std::int64_t kMinTail = 10;

/// Tail log-likelihood -n_tail ln zeta(alpha, xmin) - alpha sum ln x over x >= xmin.
double powerlaw_log_likelihood(std::span<const std::int64_t> data, double alpha,
                               std::int64_t xmin);

/// Largest gap between the empirical and fitted CDFs over the integers
/// xmin..max(data).
double ks_distance(std::span<const std::int64_t> data, double alpha, std::int64_t xmin);

/// Maximum-likelihood exponent with the KS-minimizing cutoff. Candidate
/// cutoffs are the distinct values except the largest, restricted to tails of
/// at least kMinTail observations. Throws Error on fewer than 10 values,
/// non-positive values, or a single distinct value.
PowerLawFit fit_powerlaw(std::span<const std::int64_t> data);

/// Semi-parametric bootstrap goodness of fit. Replicate r draws from the
/// fitted tail with probability n_tail / n and from the observed values below
/// xmin otherwise, refits from scratch, and counts towards the p-value when
/// its KS distance is at least the observed one. Replicates whose refit fails
/// are discarded; more than 10% discarded throws Error. `threads` = 0 uses
/// every hardware thread; the result does not depend on it.
PowerLawFit bootstrap_pvalue(const PowerLawFit& fit, std::span<const std::int64_t> data,
                             int replicates, std::uint64_t seed, unsigned threads = 0);

/// Exact inverse-CDF sampler. The CDF is tabulated up to where the remaining
/// tail mass drops below 1e-9 (at most 2^20 entries); draws beyond the table
/// are resolved with Hurwitz zeta bisection.
class DiscretePowerLaw {
 public:
  DiscretePowerLaw(double alpha, std::int64_t xmin);

  std::int64_t operator()(Rng& rng) const;
  double cdf(std::int64_t x) const;  // P(X <= x)

  double alpha() const { return alpha_; }
  std::int64_t xmin() const { return xmin_; }

 private:
  std::int64_t tail_search(double survival) const;

  double alpha_;
  std::int64_t xmin_;
  double norm_;
  std::vector<double> table_;  // table_[k] = P(X <= xmin + k)
};

std::vector<std::int64_t> sample_discrete_powerlaw(double alpha, std::int64_t xmin,
                                                   std::int64_t n, std::uint64_t seed);

enum class Alternative { kExponential, kLognormal };
enum class Favored { kPowerLaw, kAlternative, kIndeterminate };

std::string_view to_string(Alternative alternative);
std::string_view to_string(Favored favored);

struct LrtResult {
  Alternative alternative = Alternative::kExponential;
  double log_likelihood_ratio = 0.0;  // power law minus alternative, summed over the tail
  double normalized_ratio = 0.0;      // R / (sigma sqrt(n_tail))
  double p_value = 1.0;
  Favored favored = Favored::kIndeterminate;
  std::vector<double> parameters;  // exponential: {lambda}; lognormal: {mu, sigma}
};

inline constexpr double kLrtSignificance = 0.1;

/// Vuong likelihood-ratio test against an alternative fitted on the same tail
/// by maximum likelihood. Throws Error when the tail has fewer than 10 values.
LrtResult likelihood_ratio_test(std::span<const std::int64_t> data, const PowerLawFit& fit,
                                Alternative alternative);

struct CcdfPoint {
  std::int64_t x = 0;
  double empirical = 0.0;             // P(X >= x) over all data
  std::optional<double> fitted;       // (n_tail/n) * P_fit(X >= x), tail only
};

std::vector<CcdfPoint> ccdf_points(std::span<const std::int64_t> data, const PowerLawFit& fit);

}  // namespace asnkit
