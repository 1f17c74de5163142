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

#ifndef EMPATH_STATS_HPP
#define EMPATH_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace empath::stats {

double mean(std::span<const double> values);

// Unbiased sample standard deviation (n-1 denominator); requires n >= 2.
double sample_sd(std::span<const double> values);

// Regularized incomplete beta I_x(a, b), evaluated with the Lentz continued
// fraction.
double regularized_incomplete_beta(double a, double b, double x);

double student_t_cdf(double t, double df);

// Inverse CDF of Student's t, bisected on the CDF. t_quantile(0.975, 1) is
// 12.7062 to table precision.
double student_t_quantile(double p, double df);

// Linear interpolation between order statistics: the quantile sits at rank
// (n-1)*p of the sorted sample. `sorted` must be ascending and non-empty.
double quantile_sorted(std::span<const double> sorted, double p);

struct Summary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;       // 0 when degenerate
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  bool degenerate = false;  // n < 2: no spread estimate, no interval
};

// Mean, sample SD and the Student-t confidence interval
// mean +/- t(1-(1-confidence)/2, n-1) * sd / sqrt(n).
Summary summarize(std::span<const double> values, double confidence = 0.95);

struct Boxplot {
  std::size_t n = 0;
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
  double whisker_low = 0.0;   // most extreme values still inside the fences
  double whisker_high = 0.0;
  std::vector<double> outliers;  // beyond 1.5*IQR, ascending
};

Boxplot boxplot(std::span<const double> values);

}  // namespace empath::stats

#endif  // EMPATH_STATS_HPP
