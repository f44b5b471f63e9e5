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

#include "gqld/skew.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "gqld/error.h"
#include "gqld/format.h"
#include "gqld/oracle.h"

namespace gqld {
namespace {

constexpr double kNormTol = 1e-13;
constexpr double kCdfTol = 1e-10;

bool close_rel(double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y)); }

double unnormalized_log(const GqldParams& base, double skew, double y) {
  return log_cdf(base, skew * y) + log_pdf(base, y);
}

}  // namespace

SkewParams::SkewParams(GqldParams base, double skew) : base_(std::move(base)), skew_(skew) {
  if (!std::isfinite(skew)) throw DomainError("skew must be finite");
  const auto& b = base_;
  const oracle::RealFunction integrand = [&b, skew](double y) {
    return std::exp(unnormalized_log(b, skew, y));
  };
  const auto res = oracle::integrate_line(integrand, kNormTol, b.line_map());
  if (!res.converged) {
    throw ConvergenceError("skew: normalizing quadrature did not converge (estimate " +
                           format_double(res.abs_error_estimate) + ")");
  }
  norm_const_ = res.value;
  log_norm_const_ = std::log(res.value);
  symmetric_ = close_rel(b.delta(), b.alpha()) && std::abs(b.log_scale()) <= 1e-12 &&
               b.mu() == 0.0 && b.theta() == 1.0;
}

SkewParams SkewParams::standard(double alpha, double q, double skew) {
  return SkewParams(GqldParams::symmetric(alpha, q), skew);
}

double log_skew_pdf(const SkewParams& s, double y) {
  return unnormalized_log(s.base(), s.skew(), y) - s.log_norm_const();
}

double skew_pdf(const SkewParams& s, double y) { return std::exp(log_skew_pdf(s, y)); }

double skew_cdf(const SkewParams& s, double t) {
  if (std::isnan(t)) throw DomainError("skew_cdf: argument is NaN");
  if (t == -std::numeric_limits<double>::infinity()) return 0.0;
  if (t == std::numeric_limits<double>::infinity()) return 1.0;
  const oracle::RealFunction g = [&s, t](double x) { return skew_pdf(s, t - x); };
  const auto map = s.base().line_map();
  const auto res = oracle::integrate_halfline(g, kCdfTol, map.scale / 2.0);
  if (!res.converged) {
    throw ConvergenceError("skew_cdf: quadrature did not converge at t = " + format_double(t));
  }
  return std::clamp(res.value, 0.0, 1.0);
}

std::vector<double> skew_cdf_sorted(const SkewParams& s, std::span<const double> ascending) {
  std::vector<double> out;
  out.reserve(ascending.size());
  if (ascending.empty()) return out;
  if (!std::is_sorted(ascending.begin(), ascending.end())) {
    throw DomainError("skew_cdf_sorted: points must be ascending");
  }
  double acc = skew_cdf(s, ascending.front());
  out.push_back(acc);
  const oracle::RealFunction f = [&s](double y) { return skew_pdf(s, y); };
  for (std::size_t i = 1; i < ascending.size(); ++i) {
    const double lo = ascending[i - 1];
    const double hi = ascending[i];
    if (hi > lo) {
      const auto res = oracle::integrate_interval(f, lo, hi, 1e-14);
      if (!res.converged) throw ConvergenceError("skew_cdf_sorted: gap quadrature failed");
      acc += res.value;
    }
    out.push_back(std::clamp(acc, 0.0, 1.0));
  }
  return out;
}

SkewSampleResult skew_sample_with_stats(const SkewParams& s, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw DomainError("skew_sample: n must be >= 1");
  Rng rng(seed);
  SkewSampleResult out;
  out.batch.seed = seed;
  out.batch.source = SampleSource::kSkewRejection;
  out.batch.params_fingerprint = s.base().fingerprint() + ";skew=" + format_double(s.skew());
  out.batch.values.reserve(n);
  while (out.batch.values.size() < n) {
    const double y = draw_type2_beta(s.base(), rng);
    ++out.proposals;
    if (std::log(open_uniform(rng)) < log_cdf(s.base(), s.skew() * y)) {
      out.batch.values.push_back(y);
    }
  }
  return out;
}

SampleBatch skew_sample(const SkewParams& s, std::size_t n, std::uint64_t seed) {
  return skew_sample_with_stats(s, n, seed).batch;
}

ValidationReport check_log_concavity(const SkewParams& s, const GridSpec& grid) {
  if (grid.from() > -15.0 || grid[grid.size() - 1] < 15.0 - 1e-9 || grid.step() > 0.01) {
    throw DomainError("check_log_concavity: grid must cover [-15, 15] with step <= 0.01");
  }
  double worst = -std::numeric_limits<double>::infinity();
  double where = std::numeric_limits<double>::quiet_NaN();
  double prev2 = log_skew_pdf(s, grid[0]);
  double prev1 = log_skew_pdf(s, grid[1]);
  for (std::size_t i = 2; i < grid.size(); ++i) {
    const double cur = log_skew_pdf(s, grid[i]);
    const double d2 = prev2 - 2.0 * prev1 + cur;
    if (!(d2 <= worst)) {
      worst = std::isnan(d2) ? std::numeric_limits<double>::infinity() : d2;
      where = grid[i - 1];
    }
    prev2 = prev1;
    prev1 = cur;
  }
  auto r = ValidationReport::make("skew_log_concavity[skew=" + format_double(s.skew()) + "]",
                                  worst, 1e-9, grid.size());
  r.location = where;
  if (!s.symmetric_base()) r.note = "base outside symmetric subfamily";
  return r;
}

double half_limit_distance(const GqldParams& base, double skew) {
  const SkewParams s(base, skew);
  const GridSpec grid(0.1, 15.0, 0.01);
  double sup = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double y = grid[i];
    sup = std::max(sup, std::abs(skew_pdf(s, y) - 2.0 * pdf(base, y)));
  }
  return sup;
}

ValidationReport check_tail_limit(const SkewParams& s) {
  constexpr std::array<double, 3> kSkews = {20.0, 100.0, 500.0};
  std::array<double, 3> d{};
  for (std::size_t i = 0; i < kSkews.size(); ++i) d[i] = half_limit_distance(s.base(), kSkews[i]);
  const double worst = std::max(d[1] - d[0], d[2] - d[1]);
  auto r = ValidationReport::make("skew_half_limit", worst, 0.0, kSkews.size());
  r.note = "distances " + format_double(d[0]) + " " + format_double(d[1]) + " " +
           format_double(d[2]);
  if (!s.symmetric_base()) r.note += "; base outside symmetric subfamily";
  return r;
}

}  // namespace gqld
