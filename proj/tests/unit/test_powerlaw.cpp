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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "asnkit/error.hpp"
#include "asnkit/powerlaw.hpp"
#include "doctest.h"

using namespace asnkit;

namespace {

std::vector<std::int64_t> geometric(double p, int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::int64_t> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(1 + static_cast<std::int64_t>(std::floor(std::log1p(-rng.uniform()) / std::log1p(-p))));
  }
  return out;
}

std::vector<std::int64_t> with_noise_below(std::vector<std::int64_t> tail, int noise, std::int64_t xmin,
                                           std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < noise; ++i) tail.push_back(1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(xmin - 1))));
  return tail;
}

}  // namespace

TEST_CASE("Hurwitz zeta against closed forms and direct sums") {
  const double pi = std::numbers::pi;
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - pi * pi / 6.0) < 1e-10);
  CHECK(std::abs(hurwitz_zeta(4.0, 1.0) - std::pow(pi, 4) / 90.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(2.0, 0.5) - pi * pi / 2.0) < 1e-10);
  // zeta(s, q) - zeta(s, q + 1) = q^-s
  for (double s : {1.05, 1.5, 2.5, 5.5}) {
    for (double q : {1.0, 3.0, 17.0, 250.0}) {
      const double lhs = hurwitz_zeta(s, q) - hurwitz_zeta(s, q + 1.0);
      CHECK(lhs == doctest::Approx(std::pow(q, -s)).epsilon(1e-9));
    }
  }
  // brute summation with an integral tail
  double direct = 0;
  for (int k = 0; k < 200000; ++k) direct += std::pow(5.0 + k, -2.5);
  direct += std::pow(200005.0 - 0.5, -1.5) / 1.5;
  CHECK(hurwitz_zeta(2.5, 5.0) == doctest::Approx(direct).epsilon(1e-9));
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), Error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), Error);
}

TEST_CASE("sampler matches the analytic point mass") {
  const auto draws = sample_discrete_powerlaw(2.5, 1, 1'000'000, 42);
  const double ones = static_cast<double>(std::count(draws.begin(), draws.end(), 1));
  const double expected = 1.0 / hurwitz_zeta(2.5, 1.0);
  CHECK(expected == doctest::Approx(0.7454).epsilon(1e-4));
  CHECK(std::abs(ones / 1e6 - expected) / expected < 0.01);

  const DiscretePowerLaw law(2.5, 5);
  CHECK(law.cdf(4) == 0.0);
  // cumulative zeta sums give the CDF independently of the table
  for (std::int64_t x : {5, 6, 20, 1000, 5'000'000}) {
    const double want = 1.0 - hurwitz_zeta(2.5, static_cast<double>(x + 1)) / hurwitz_zeta(2.5, 5.0);
    CHECK(law.cdf(x) == doctest::Approx(want).epsilon(1e-9));
  }
  CHECK(sample_discrete_powerlaw(2.5, 5, 100, 9) == sample_discrete_powerlaw(2.5, 5, 100, 9));
  CHECK(sample_discrete_powerlaw(2.5, 5, 100, 9) != sample_discrete_powerlaw(2.5, 5, 100, 10));
  for (auto x : sample_discrete_powerlaw(1.2, 3, 2000, 1)) CHECK(x >= 3);

  CHECK_THROWS_AS(sample_discrete_powerlaw(2.5, 1, 0, 1), Error);
  CHECK_THROWS_AS(sample_discrete_powerlaw(1.0, 1, 10, 1), Error);
  CHECK_THROWS_AS(sample_discrete_powerlaw(2.5, 0, 10, 1), Error);
}

TEST_CASE("fit recovers exponent and cutoff") {
  const auto data = with_noise_below(sample_discrete_powerlaw(2.5, 5, 8000, 3), 2000, 5, 4);
  const auto fit = fit_powerlaw(data);
  CHECK(fit.alpha >= 2.45);
  CHECK(fit.alpha <= 2.55);
  CHECK(fit.xmin >= 4);
  CHECK(fit.xmin <= 6);
  CHECK(fit.n == 10000);
  CHECK(fit.ks == ks_distance(data, fit.alpha, fit.xmin));  // bit-equal recomputation
  CHECK_FALSE(fit.p_value.has_value());

  // the exponent is a local maximum of the tail likelihood
  const double l0 = powerlaw_log_likelihood(data, fit.alpha, fit.xmin);
  CHECK(powerlaw_log_likelihood(data, fit.alpha + 1e-4, fit.xmin) <= l0);
  CHECK(powerlaw_log_likelihood(data, fit.alpha - 1e-4, fit.xmin) <= l0);
}

TEST_CASE("fit preconditions") {
  CHECK_THROWS_AS(fit_powerlaw(std::vector<std::int64_t>(9, 3)), Error);
  CHECK_THROWS_WITH_AS(fit_powerlaw(std::vector<std::int64_t>(50, 3)),
                       doctest::Contains("degenerate"), Error);
  std::vector<std::int64_t> with_zero(20, 2);
  with_zero[4] = 0;
  CHECK_THROWS_AS(fit_powerlaw(with_zero), Error);
}

TEST_CASE("KS distance shrinks on large exact samples") {
  const auto data = sample_discrete_powerlaw(2.2, 3, 100'000, 17);
  CHECK(ks_distance(data, 2.2, 3) < 0.01);
  CHECK(ks_distance(data, 3.0, 3) > 0.05);
}

TEST_CASE("bootstrap is deterministic and thread independent") {
  const auto data = sample_discrete_powerlaw(2.5, 2, 600, 5);
  const auto fit = fit_powerlaw(data);
  const auto a = bootstrap_pvalue(fit, data, 100, 1234, 1);
  const auto b = bootstrap_pvalue(fit, data, 100, 1234, 1);
  const auto c = bootstrap_pvalue(fit, data, 100, 1234, 3);
  REQUIRE(a.p_value.has_value());
  CHECK(*a.p_value >= 0.0);
  CHECK(*a.p_value <= 1.0);
  CHECK(*a.p_value == *b.p_value);
  CHECK(*a.p_value == *c.p_value);
  CHECK(a.replicates == 100);
  CHECK(a.seed == 1234);
  CHECK(a.alpha == fit.alpha);
  CHECK_THROWS_AS(bootstrap_pvalue(fit, data, 99, 1), Error);
}

TEST_CASE("bootstrap p-values are roughly uniform under the null") {
  // scaled down: 40 runs of n = 400 with 100 replicates, Kolmogorov test at 5%
  std::vector<double> ps;
  for (std::uint64_t run = 0; run < 40; ++run) {
    const auto data = sample_discrete_powerlaw(2.5, 1, 400, 9000 + run);
    const auto fit = fit_powerlaw(data);
    ps.push_back(*bootstrap_pvalue(fit, data, 100, 7000 + run, 1).p_value);
  }
  std::sort(ps.begin(), ps.end());
  double d = 0;
  const double m = static_cast<double>(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    d = std::max({d, static_cast<double>(i + 1) / m - ps[i], ps[i] - static_cast<double>(i) / m});
  }
  CHECK(d < 1.36 / std::sqrt(m));
}

TEST_CASE("likelihood ratio tests") {
  SUBCASE("power-law data favors the power law over the exponential") {
    const auto data = sample_discrete_powerlaw(2.5, 1, 5000, 21);
    const auto fit = fit_powerlaw(data);
    const auto r = likelihood_ratio_test(data, fit, Alternative::kExponential);
    CHECK(r.log_likelihood_ratio > 0);
    CHECK(r.p_value <= kLrtSignificance);
    CHECK(r.favored == Favored::kPowerLaw);
    REQUIRE(r.parameters.size() == 1);
  }
  SUBCASE("geometric data favors the exponential") {
    const auto data = geometric(0.2, 5000, 22);
    const auto fit = fit_powerlaw(data);
    const auto r = likelihood_ratio_test(data, fit, Alternative::kExponential);
    CHECK(r.log_likelihood_ratio < 0);
    CHECK(r.favored == Favored::kAlternative);
  }
  SUBCASE("lognormal alternative returns two parameters") {
    const auto data = sample_discrete_powerlaw(2.5, 1, 3000, 23);
    const auto fit = fit_powerlaw(data);
    const auto r = likelihood_ratio_test(data, fit, Alternative::kLognormal);
    REQUIRE(r.parameters.size() == 2);
    CHECK(r.parameters[1] > 0);
    CHECK(r.p_value >= 0.0);
    CHECK(r.p_value <= 1.0);
    if (r.p_value > kLrtSignificance) CHECK(r.favored == Favored::kIndeterminate);
  }
  SUBCASE("tiny tail") {
    std::vector<std::int64_t> data = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6};
    PowerLawFit fit;
    fit.alpha = 2.0;
    fit.xmin = 2;
    fit.n_tail = 5;
    fit.n = static_cast<std::int64_t>(data.size());
    CHECK_THROWS_AS(likelihood_ratio_test(data, fit, Alternative::kExponential), Error);
  }
  CHECK(to_string(Alternative::kLognormal) == "lognormal");
  CHECK(to_string(Favored::kPowerLaw) == "powerlaw");
}

TEST_CASE("CCDF points") {
  const std::vector<std::int64_t> data = {1, 1, 2, 3, 3, 3, 4, 8, 8, 9, 10, 12};
  PowerLawFit fit;
  fit.alpha = 2.0;
  fit.xmin = 3;
  fit.n = 12;
  fit.n_tail = 9;
  const auto pts = ccdf_points(data, fit);
  REQUIRE(pts.size() == 8);
  CHECK(pts[0].x == 1);
  CHECK(pts[0].empirical == 1.0);
  CHECK_FALSE(pts[0].fitted.has_value());
  CHECK(pts[2].x == 3);
  CHECK(pts[2].empirical == doctest::Approx(9.0 / 12.0));
  REQUIRE(pts[2].fitted.has_value());
  CHECK(*pts[2].fitted == doctest::Approx(9.0 / 12.0));
  CHECK(*pts[3].fitted == doctest::Approx(0.75 * hurwitz_zeta(2.0, 4.0) / hurwitz_zeta(2.0, 3.0)));
}

TEST_CASE("KS distance matches a walk over every integer in the tail") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto data = sample_discrete_powerlaw(2.5, 5, 2000, seed);
    for (std::int64_t xmin : {5, 6, 7, 9}) {
      std::vector<std::int64_t> tail;
      for (auto x : data)
        if (x >= xmin) tail.push_back(x);
      std::sort(tail.begin(), tail.end());
      if (tail.back() > 300000) continue;  // keep the walk short
      const double z = hurwitz_zeta(2.5, static_cast<double>(xmin));
      const auto n = static_cast<double>(tail.size());
      double cdf = 0, worst = 0;
      std::size_t seen = 0;
      for (std::int64_t x = xmin; x <= tail.back(); ++x) {
        cdf += std::pow(static_cast<double>(x), -2.5) / z;
        while (seen < tail.size() && tail[seen] <= x) ++seen;
        worst = std::max(worst, std::abs(static_cast<double>(seen) / n - cdf));
      }
      CHECK(ks_distance(data, 2.5, xmin) == doctest::Approx(worst).epsilon(1e-9));
    }
  }
}
