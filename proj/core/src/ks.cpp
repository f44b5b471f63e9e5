// Copyright 2026 The gqld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gqld/ks.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gqld/error.h"

namespace gqld {

double kolmogorov_survival(double lambda) {
  if (std::isnan(lambda)) throw DomainError("kolmogorov_survival: NaN argument");
  if (lambda <= 0.0) return 1.0;
  constexpr double kTol = 1e-10;
  if (lambda < 1.0) {
    // P(K <= l) = sqrt(2 pi) / l * sum_k exp(-(2k-1)^2 pi^2 / (8 l^2)).
    const double c = std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
    double sum = 0.0;
    for (int k = 1; k < 1000; ++k) {
      const double odd = 2.0 * k - 1.0;
      const double term = std::exp(-odd * odd * c);
      sum += term;
      if (term < kTol * std::max(sum, 1e-300)) break;
    }
    return std::clamp(1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int k = 1; k < 1000; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1) ? term : -term;
    if (term < kTol) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double kolmogorov_critical(double level) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("kolmogorov_critical: level in (0, 1)");
  double lo = 0.0;
  double hi = 10.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_survival(mid) > level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

KsResult ks_from_sorted_cdf(std::span<const double> cdf_at_sorted) {
  if (cdf_at_sorted.empty()) throw DomainError("ks: empty sample");
  const double n = static_cast<double>(cdf_at_sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < cdf_at_sorted.size(); ++i) {
    const double f = cdf_at_sorted[i];
    const double above = static_cast<double>(i + 1) / n - f;
    const double below = f - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  d = std::clamp(d, 0.0, 1.0);
  return {d, kolmogorov_survival(std::sqrt(n) * d)};
}

KsResult ks_statistic(std::span<const double> values, const std::function<double(double)>& cdf) {
  if (values.empty()) throw DomainError("ks: empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  for (auto& v : sorted) v = cdf(v);
  return ks_from_sorted_cdf(sorted);
}

KsResult ks_statistic(const SampleBatch& batch, const std::function<double(double)>& cdf) {
  return ks_statistic(batch.values, cdf);
}

KsResult ks_two_sample(std::span<const double> first, std::span<const double> second) {
  if (first.empty() || second.empty()) throw DomainError("ks: empty sample");
  std::vector<double> a(first.begin(), first.end());
  std::vector<double> b(second.begin(), second.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return {d, kolmogorov_survival(std::sqrt(na * nb / (na + nb)) * d)};
}

}  // namespace gqld
