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

#include "empath/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace empath::stats {

namespace {

// Lentz's algorithm for the incomplete-beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 300;
  constexpr double kEpsilon = 1e-15;
  constexpr double kTiny = 1e-30;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEpsilon) break;
  }
  return h;
}

}  // namespace

double mean(std::span<const double> values) {
  if (values.empty()) {
    throw Error(DiagCode::EmptyInput, "mean: no values");
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double sample_sd(std::span<const double> values) {
  if (values.size() < 2) {
    throw Error(DiagCode::EmptyInput, "sample_sd: need at least two values");
  }
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log(1.0 - x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
  if (df <= 0.0) {
    throw std::invalid_argument("student_t_cdf: df must be positive");
  }
  const double x = df / (df + t * t);
  const double tail = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x);
  return t >= 0.0 ? 1.0 - tail : tail;
}

double student_t_quantile(double p, double df) {
  if (df <= 0.0 || !(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("student_t_quantile: need df > 0 and p in (0,1)");
  }
  if (p == 0.5) return 0.0;
  if (p < 0.5) return -student_t_quantile(1.0 - p, df);

  double lo = 0.0;
  double hi = 1.0;
  while (student_t_cdf(hi, df) < p) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) break;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (student_t_cdf(mid, df) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) {
    throw Error(DiagCode::EmptyInput, "quantile_sorted: no values");
  }
  const double rank = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(rank);
  const double frac = rank - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted[sorted.size() - 1];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

Summary summarize(std::span<const double> values, double confidence) {
  if (values.empty()) {
    throw Error(DiagCode::EmptyInput, "summarize: no values");
  }
  Summary s;
  s.n = values.size();
  s.mean = mean(values);
  if (s.n < 2) {
    s.degenerate = true;
    s.ci_lo = s.mean;
    s.ci_hi = s.mean;
    return s;
  }
  s.sd = sample_sd(values);
  const double p = 1.0 - (1.0 - confidence) / 2.0;
  const double t = student_t_quantile(p, static_cast<double>(s.n - 1));
  const double half_width = t * s.sd / std::sqrt(static_cast<double>(s.n));
  s.ci_lo = s.mean - half_width;
  s.ci_hi = s.mean + half_width;
  return s;
}

Boxplot boxplot(std::span<const double> values) {
  if (values.empty()) {
    throw Error(DiagCode::EmptyInput, "boxplot: no values");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  Boxplot b;
  b.n = sorted.size();
  b.min = sorted.front();
  b.max = sorted.back();
  b.q1 = quantile_sorted(sorted, 0.25);
  b.median = quantile_sorted(sorted, 0.5);
  b.q3 = quantile_sorted(sorted, 0.75);

  const double iqr = b.q3 - b.q1;
  const double fence_low = b.q1 - 1.5 * iqr;
  const double fence_high = b.q3 + 1.5 * iqr;
  // an inlier always exists: the data bracketing the median sit inside the
  // fences, so the q1/q3 defaults below are never kept
  b.whisker_low = b.q1;
  b.whisker_high = b.q3;
  bool have_inlier = false;
  for (double v : sorted) {
    if (v < fence_low || v > fence_high) {
      b.outliers.push_back(v);
      continue;
    }
    if (!have_inlier) {
      b.whisker_low = v;
      have_inlier = true;
    }
    b.whisker_high = v;
  }
  return b;
}

}  // namespace empath::stats
