// Copyright 2026 The empath Authors
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

#include "empath/stats.hpp"

#include "approx.hpp"
#include "empath/diagnostics.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace empath;

TEST_CASE("t quantiles match published table values") {
  // table values: df 1 -> 12.7062, df 59 -> 2.0010
  CHECK_NEAR(stats::student_t_quantile(0.975, 1), 12.7062, 1e-3);
  CHECK_NEAR(stats::student_t_quantile(0.975, 59), 2.0010, 1e-3);
  // a couple of familiar rows
  CHECK_NEAR(stats::student_t_quantile(0.975, 4), 2.7764, 1e-3);
  CHECK_NEAR(stats::student_t_quantile(0.95, 10), 1.8125, 1e-3);
}

TEST_CASE("t quantile symmetry and monotonicity") {
  for (double df : {1.0, 2.0, 5.0, 30.0, 120.0}) {
    CHECK_NEAR(stats::student_t_quantile(0.025, df),
               -stats::student_t_quantile(0.975, df), 1e-10);
    CHECK(stats::student_t_quantile(0.5, df) == 0.0);
  }
  // for fixed p > 0.5 the quantile shrinks as df grows
  double previous = stats::student_t_quantile(0.975, 1);
  for (double df = 2; df <= 60; ++df) {
    const double q = stats::student_t_quantile(0.975, df);
    CHECK(q < previous);
    previous = q;
  }
}

TEST_CASE("t cdf is the inverse of the quantile") {
  for (double df : {1.0, 7.0, 59.0}) {
    for (double p : {0.6, 0.8, 0.95, 0.975, 0.999}) {
      const double t = stats::student_t_quantile(p, df);
      CHECK_NEAR(stats::student_t_cdf(t, df), p, 1e-9);
    }
  }
  CHECK_NEAR(stats::student_t_cdf(0.0, 5.0), 0.5, 1e-12);
}

TEST_CASE("incomplete beta sanity") {
  CHECK(stats::regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(stats::regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
  // I_x(1,1) is the identity
  for (double x : {0.1, 0.5, 0.9}) {
    CHECK_NEAR(stats::regularized_incomplete_beta(1.0, 1.0, x), x, 1e-12);
  }
  // complement identity I_x(a,b) + I_{1-x}(b,a) = 1
  for (double x : {0.2, 0.35, 0.77}) {
    const double lhs = stats::regularized_incomplete_beta(2.5, 4.0, x) +
                       stats::regularized_incomplete_beta(4.0, 2.5, 1.0 - x);
    CHECK_NEAR(lhs, 1.0, 1e-12);
  }
}

TEST_CASE("summarize: the {3,5} interval from the worked example") {
  const std::vector<double> values{3.0, 5.0};
  const auto s = stats::summarize(values);
  CHECK(s.n == 2);
  CHECK(s.mean == 4.0);
  CHECK_NEAR(s.sd, std::sqrt(2.0), 1e-12);
  CHECK_NEAR(s.ci_lo, -8.7062, 1e-3);
  CHECK_NEAR(s.ci_hi, 16.7062, 1e-3);
  CHECK_FALSE(s.degenerate);
}

TEST_CASE("summarize degenerate and zero-variance cases") {
  const std::vector<double> one{4.2};
  const auto single = stats::summarize(one);
  CHECK(single.degenerate);
  CHECK(single.mean == 4.2);

  const std::vector<double> flat(60, 4.0);
  const auto constant = stats::summarize(flat);
  CHECK_FALSE(constant.degenerate);
  CHECK(constant.mean == 4.0);
  CHECK(constant.sd == 0.0);
  CHECK(constant.ci_lo == 4.0);
  CHECK(constant.ci_hi == 4.0);

  CHECK_THROWS_AS(stats::summarize(std::vector<double>{}), Error);
}

TEST_CASE("confidence half-width shrinks with n for fixed sd") {
  double previous = 1e300;
  for (std::size_t n = 2; n <= 60; ++n) {
    const double half = stats::student_t_quantile(0.975, static_cast<double>(n - 1)) /
                        std::sqrt(static_cast<double>(n));
    CHECK(half < previous);
    previous = half;
  }
}

TEST_CASE("quantile_sorted interpolates order statistics") {
  const std::vector<double> five{1, 2, 3, 4, 5};
  CHECK(stats::quantile_sorted(five, 0.25) == 2.0);
  CHECK(stats::quantile_sorted(five, 0.5) == 3.0);
  CHECK(stats::quantile_sorted(five, 0.75) == 4.0);

  const std::vector<double> pair{1, 4};
  CHECK(stats::quantile_sorted(pair, 0.5) == 2.5);
  CHECK(stats::quantile_sorted(pair, 0.25) == 1.75);

  const std::vector<double> single{4};
  CHECK(stats::quantile_sorted(single, 0.0) == 4.0);
  CHECK(stats::quantile_sorted(single, 1.0) == 4.0);
}

TEST_CASE("boxplot worked examples") {
  SUBCASE("1..5 has no outliers") {
    const std::vector<double> values{1, 2, 3, 4, 5};
    const auto b = stats::boxplot(values);
    CHECK(b.q1 == 2.0);
    CHECK(b.median == 3.0);
    CHECK(b.q3 == 4.0);
    CHECK(b.outliers.empty());
    CHECK(b.whisker_low == 1.0);
    CHECK(b.whisker_high == 5.0);
  }
  SUBCASE("degenerate IQR flags the stray value") {
    const std::vector<double> values{3, 3, 3, 3, 3, 1};
    const auto b = stats::boxplot(values);
    CHECK(b.q1 == 3.0);
    CHECK(b.median == 3.0);
    CHECK(b.q3 == 3.0);
    CHECK(b.min == 1.0);
    REQUIRE(b.outliers.size() == 1);
    CHECK(b.outliers[0] == 1.0);
    CHECK(b.whisker_low == 3.0);
    CHECK(b.whisker_high == 3.0);
  }
  SUBCASE("singleton") {
    const std::vector<double> values{4};
    const auto b = stats::boxplot(values);
    CHECK(b.min == 4.0);
    CHECK(b.q1 == 4.0);
    CHECK(b.median == 4.0);
    CHECK(b.q3 == 4.0);
    CHECK(b.max == 4.0);
    CHECK(b.outliers.empty());
  }
}

TEST_CASE("mean and sample_sd basics") {
  const std::vector<double> values{3.0, 5.0};
  CHECK(stats::mean(values) == 4.0);
  CHECK_NEAR(stats::sample_sd(values), std::sqrt(2.0), 1e-15);
  CHECK_THROWS_AS(stats::sample_sd(std::vector<double>{1.0}), Error);
}
