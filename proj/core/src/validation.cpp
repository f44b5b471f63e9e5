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

#include "gqld/validation.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "gqld/characterize.h"
#include "gqld/distribution.h"
#include "gqld/format.h"
#include "gqld/ks.h"
#include "gqld/oracle.h"
#include "gqld/random.h"
#include "gqld/skew.h"
#include "gqld/special_fns.h"

namespace gqld::validation {
namespace {

using Reports = std::vector<ValidationReport>;

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double operator()(double lo, double hi) { return lo + (hi - lo) * open_uniform(rng_); }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(std::floor((hi - lo + 1) * open_uniform(rng_)));
  }

 private:
  Rng rng_;
};

GqldParams random_params(Uniform& u, double alpha_lo, double alpha_hi, double delta_lo,
                         double delta_hi) {
  const double q = u(1.05, 5.0);
  const double alpha = u(alpha_lo, alpha_hi);
  const double delta = u(delta_lo, delta_hi);
  return GqldParams({.alpha = alpha,
                     .beta = (alpha + delta) * (q - 1.0),
                     .a = u(0.5, 2.0),
                     .q = q,
                     .mu = u(-5.0, 5.0),
                     .theta = u(0.5, 3.0)});
}

GqldParams random_alpha1(Uniform& u) {
  const double q = u(1.1, 3.0);
  const double delta = u(0.5, 5.0);
  return GqldParams({.alpha = 1.0,
                     .beta = (1.0 + delta) * (q - 1.0),
                     .a = u(0.5, 2.0),
                     .q = q,
                     .mu = u(-2.0, 2.0),
                     .theta = u(1.0, 2.0)});
}

const GqldParams& reference_alpha1() {
  static const GqldParams p({.alpha = 1.0, .beta = 3.0, .a = 1.0, .q = 2.0});
  return p;
}

double ks_threshold(std::size_t n) {
  return kolmogorov_critical(0.01) / std::sqrt(static_cast<double>(n));
}

ValidationReport ks_report(std::string name, const KsResult& ks, std::size_t n) {
  auto r = ValidationReport::make(std::move(name), ks.statistic, ks_threshold(n), n);
  r.note = "p=" + format_double(ks.p_value);
  return r;
}

// ---------------------------------------------------------------- special

ValidationReport inc_beta_symmetry(Uniform& u) {
  double worst = 0.0;
  constexpr std::size_t kN = 10'000;
  for (std::size_t i = 0; i < kN; ++i) {
    const double p = u(0.1, 50.0);
    const double q = u(0.1, 50.0);
    const double x = u(0.0, 1.0);
    const double s = special::reg_inc_beta(x, p, q) + special::reg_inc_beta(1.0 - x, q, p);
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return ValidationReport::make("special.inc_beta_symmetry", worst, 1e-12, kN);
}

ValidationReport gamma_recurrence(Uniform& u) {
  double worst = 0.0;
  constexpr std::size_t kN = 1'000;
  for (std::size_t i = 0; i < kN; ++i) {
    const ComplexValue z(u(0.5, 20.0), u(-20.0, 20.0));
    const ComplexValue lhs = special::gamma_complex(z + 1.0);
    const ComplexValue rhs = z * special::gamma_complex(z);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  return ValidationReport::make("special.gamma_complex_recurrence", worst, 1e-11, kN);
}

ValidationReport gamma_real_axis() {
  double worst = 0.0;
  std::size_t n = 0;
  for (double x = 0.05; x < 60.0; x += 0.37, ++n) {
    const double ref = std::exp(special::ln_gamma(x));
    worst = std::max(worst, std::abs(special::gamma_complex(x).real() - ref) / ref);
  }
  return ValidationReport::make("special.gamma_complex_real_axis", worst, 1e-12, n);
}

ValidationReport digamma_difference() {
  constexpr double h = 1e-6;
  double worst = 0.0;
  std::size_t n = 0;
  for (double x = 0.5; x <= 50.0; x += 0.25, ++n) {
    const double fd = (special::ln_gamma(x + h) - special::ln_gamma(x - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - special::digamma(x)));
  }
  return ValidationReport::make("special.digamma_finite_difference", worst, 1e-6, n);
}

ValidationReport hyp2f1_use_site(Uniform& u) {
  double worst = 0.0;
  constexpr std::size_t kN = 1'000;
  for (std::size_t i = 0; i < kN; ++i) {
    const auto p = random_params(u, 0.2, 5.0, 0.2, 5.0);
    // Keep s = a(q-1)e^z within [e^-6, 50], where the transformed series converges.
    const double log_s = u(-6.0, std::log(50.0));
    const double y = p.mu() + p.theta() * (log_s - p.log_scale());
    worst = std::max(worst, std::abs(cdf(p, y) - cdf_hyp2f1(p, y)));
  }
  return ValidationReport::make("special.hyp2f1_vs_inc_beta", worst, 1e-9, kN);
}

ValidationReport quadrature_honesty() {
  using oracle::HalfLineMap;
  struct Case {
    std::function<oracle::QuadratureResult()> run;
    double exact;
  };
  const double pi = std::numbers::pi;
  const double tol = 1e-10;
  const std::array<Case, 10> cases = {{
      {[&] {
         return oracle::integrate_interval([](double x) { return x * x * x; }, 0.0, 1.0, tol);
       },
       0.25},
      {[&] {
         return oracle::integrate_interval([](double x) { return std::sin(x); }, 0.0, pi, tol);
       },
       2.0},
      {[&] {
         return oracle::integrate_interval([](double x) { return std::sqrt(x); }, 0.0, 1.0, tol);
       },
       2.0 / 3.0},
      {[&] { return oracle::integrate_line([](double y) { return std::exp(-y * y); }, tol); },
       std::sqrt(pi)},
      {[&] {
         return oracle::integrate_line([](double y) { return 1.0 / std::cosh(y); }, tol,
                                       {0.0, 4.0});
       },
       pi},
      {[&] {
         return oracle::integrate_line(
             [](double y) {
               const double e = std::exp(-std::abs(y));
               return e / ((1.0 + e) * (1.0 + e));
             },
             tol, {0.0, 4.0});
       },
       1.0},
      {[&] { return oracle::integrate_halfline([](double x) { return std::exp(-x); }, tol); }, 1.0},
      {[&] { return oracle::integrate_halfline([](double x) { return x * std::exp(-x); }, tol); },
       1.0},
      {[&] {
         return oracle::integrate_halfline([](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); },
                                           tol, 1.0, HalfLineMap::kAlgebraic);
       },
       1.0},
      {[&] {
         return oracle::integrate_halfline(
             [](double x) { return std::exp(-x) / std::sqrt(x); }, tol);
       },
       std::sqrt(pi)},
  }};
  // The singular case hits the panel cap; its estimate must still bound the true error.
  double worst_ratio = 0.0;
  std::size_t unconverged = 0;
  for (const auto& c : cases) {
    const auto r = c.run();
    const double err = std::abs(r.value - c.exact);
    const double ratio = err == 0.0 ? 0.0 : err / std::max(r.abs_error_estimate, 1e-300);
    worst_ratio = std::max(worst_ratio, ratio);
    if (!r.converged) ++unconverged;
  }
  auto report = ValidationReport::make("special.quadrature_error_honesty", worst_ratio, 3.0,
                                       cases.size());
  report.note = "unconverged=" + std::to_string(unconverged);
  return report;
}

ValidationReport quadrature_normal() {
  const auto r = oracle::integrate_line(
      [](double y) { return std::exp(-0.5 * y * y) / std::sqrt(2.0 * std::numbers::pi); }, 1e-12);
  const auto zero = oracle::integrate_line([](double) { return 0.0; }, 1e-12);
  return ValidationReport::make("special.quadrature_normal_density",
                                std::abs(r.value - 1.0) + std::abs(zero.value), 1e-10, 1);
}

// ----------------------------------------------------------- distribution

ValidationReport normalization(Uniform& u) {
  double worst = 0.0;
  constexpr std::size_t kSets = 50;
  for (std::size_t i = 0; i < kSets; ++i) {
    const auto p = random_params(u, 0.2, 10.0, 0.2, 10.0);
    const auto r = oracle::integrate_line([&p](double y) { return pdf(p, y); }, 1e-10,
                                          p.line_map());
    worst = std::max(worst, r.converged ? std::abs(r.value - 1.0) : INFINITY);
  }
  return ValidationReport::make("dist.normalization", worst, 1e-8, kSets);
}

ValidationReport cdf_derivative(Uniform& u) {
  double worst = 0.0;
  constexpr std::size_t kSets = 10;
  constexpr std::size_t kPoints = 100;
  for (std::size_t i = 0; i < kSets; ++i) {
    const auto p = random_params(u, 0.3, 8.0, 0.3, 8.0);
    const double h = 1e-5 * p.theta();
    for (std::size_t j = 0; j < kPoints; ++j) {
      const double prob = (static_cast<double>(j) + 0.5) / kPoints;
      const double y = quantile(p, prob);
      const double fd = prob < 0.5 ? (cdf(p, y + h) - cdf(p, y - h)) / (2.0 * h)
                                   : (survival(p, y - h) - survival(p, y + h)) / (2.0 * h);
      const double f = pdf(p, y);
      worst = std::max(worst, std::abs(fd - f) / f);
    }
  }
  return ValidationReport::make("dist.cdf_derivative_matches_pdf", worst, 1e-5,
                                kSets * kPoints);
}

ValidationReport alpha1_closed_forms(Uniform& u) {
  double worst = 0.0;
  constexpr std::size_t kSets = 10;
  constexpr std::size_t kPoints = 100;
  for (std::size_t i = 0; i < kSets; ++i) {
    const auto p = i == 0 ? reference_alpha1() : random_alpha1(u);
    for (std::size_t j = 0; j < kPoints; ++j) {
      const double y = p.mu() + p.theta() * u(-10.0, 10.0);
      worst = std::max({worst, std::abs(cdf_alpha1(p, y) - cdf(p, y)),
                        std::abs(survival_alpha1(p, y) - survival(p, y))});
    }
  }
  return ValidationReport::make("dist.alpha1_closed_forms", worst, 1e-12, kSets * kPoints);
}

Reports ifr_checks(Uniform& u) {
  Reports out;
  for (int i = 0; i < 4; ++i) {
    const auto p = i == 0 ? reference_alpha1() : random_alpha1(u);
    auto h = oracle::grid_monotone([&p](double t) { return hazard(p, t); }, -10.0, 10.0, 1000);
    h.check_name = "dist.hazard_increasing[" + p.fingerprint() + "]";
    out.push_back(h);
    auto c = oracle::grid_convexity([&p](double t) { return cumulative_hazard(p, t); }, -10.0,
                                    10.0, 1000);
    c.check_name = "dist.cumulative_hazard_convex[" + p.fingerprint() + "]";
    out.push_back(c);
  }
  return out;
}

double grid_max_pdf(const GqldParams& p) {
  double best = 0.0;
  const double lo = p.mu() - 20.0 * p.theta();
  const double step = p.theta() / 1000.0;
  for (int i = 0; i <= 40'000; ++i) best = std::max(best, pdf(p, lo + step * i));
  return best;
}

Reports mode_ordering() {
  constexpr std::array<std::array<double, 2>, 4> kFigures = {
      {{2.0, 2.05}, {8.0, 6.0}, {5.0, 5.0}, {-1.0, 3.0}}};
  constexpr std::array<double, 4> kQ = {1.5, 2.0, 2.5, 2.9};
  Reports out;
  for (const auto& [mu, theta] : kFigures) {
    double worst = -INFINITY;
    double prev = INFINITY;
    for (double q : kQ) {
      const GqldParams p({.alpha = 2.0, .beta = 4.0, .a = 1.0, .q = q, .mu = mu, .theta = theta});
      const double h = grid_max_pdf(p);
      worst = std::max(worst, h - prev);
      prev = h;
    }
    out.push_back(ValidationReport::make(
        "dist.mode_decreases_in_q[mu=" + format_double(mu) + ";theta=" + format_double(theta) + "]",
        worst, 0.0, kQ.size()));
  }
  return out;
}

double limit_distance(double eps) {
  const GqldParams p({.alpha = 2.0, .beta = 4.0, .a = 1.0, .q = 1.0 + eps});
  const ExtremeValueParams ev({.alpha = 2.0, .beta = 4.0, .a = 1.0});
  double sup = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double y = -30.0 + 0.01 * i;
    sup = std::max(sup, std::abs(pdf(p, y) - pdf_limit_q1(ev, y)));
  }
  return sup;
}

Reports q1_limit() {
  const std::array<double, 3> d = {limit_distance(1e-2), limit_distance(1e-4),
                                   limit_distance(1e-6)};
  auto shrink = ValidationReport::make("dist.q1_limit_shrinks",
                                       std::max(d[1] - d[0], d[2] - d[1]), 0.0, 3);
  shrink.note = "distances " + format_double(d[0]) + " " + format_double(d[1]) + " " +
                format_double(d[2]);
  return {shrink, ValidationReport::make("dist.q1_limit_final_distance", d[2], 1e-5, 4001)};
}

ValidationReport quantile_roundtrip(Uniform& u) {
  double worst = 0.0;
  constexpr std::size_t kN = 1'000;
  for (std::size_t i = 0; i < kN; ++i) {
    const auto p = random_params(u, 0.2, 10.0, 0.2, 10.0);
    const double prob = u(0.0, 1.0);
    worst = std::max(worst, std::abs(cdf(p, quantile(p, prob)) - prob));
  }
  return ValidationReport::make("dist.quantile_roundtrip", worst, 1e-9, kN);
}

Reports moments_vs_quadrature(Uniform& u) {
  double worst_mean = 0.0;
  double worst_var = 0.0;
  constexpr std::size_t kSets = 6;
  for (std::size_t i = 0; i < kSets; ++i) {
    const auto p = i == 0 ? reference_alpha1() : random_params(u, 0.5, 6.0, 0.5, 6.0);
    const auto f = [&p](double y) { return pdf(p, y); };
    const double m = oracle::moment(f, 1, 1e-11, p.line_map()).value;
    const double v =
        oracle::integrate_line([&](double y) { return (y - m) * (y - m) * pdf(p, y); }, 1e-11,
                               p.line_map())
            .value;
    worst_mean = std::max(worst_mean, std::abs(m - mean(p)));
    worst_var = std::max(worst_var, std::abs(v - variance(p)));
  }
  return {ValidationReport::make("dist.mean_vs_quadrature", worst_mean, 1e-7, kSets),
          ValidationReport::make("dist.variance_vs_quadrature", worst_var, 1e-7, kSets)};
}

Reports charfn_checks(Uniform& u) {
  constexpr std::array<double, 9> kT = {-5, -2, -1, -0.5, 0, 0.5, 1, 2, 5};
  double worst_quad = 0.0;
  double worst_mod = 0.0;
  std::size_t n = 0;
  for (int i = 0; i < 5; ++i) {
    const auto p = i == 0 ? reference_alpha1() : random_params(u, 0.3, 6.0, 0.3, 6.0);
    for (double t : kT) {
      const auto r = oracle::integrate_line_complex(
          [&](double y) { return std::polar(pdf(p, y), t * y); }, 1e-10, p.line_map());
      worst_quad = std::max(worst_quad, r.converged ? std::abs(r.value - char_fn(p, t)) : INFINITY);
      ++n;
    }
    for (double t = -20.0; t <= 20.0; t += 0.05) {
      worst_mod = std::max(worst_mod, std::abs(char_fn(p, t)) - 1.0);
    }
  }
  const ComplexValue at0 = char_fn(reference_alpha1(), 0.0);
  return {ValidationReport::make("dist.charfn_vs_quadrature", worst_quad, 1e-6, n),
          ValidationReport::make("dist.charfn_modulus_bounded", std::max(worst_mod, 0.0), 1e-12, n),
          ValidationReport::make("dist.charfn_at_zero",
                                 std::abs(at0.real() - 1.0) + std::abs(at0.imag()), 0.0, 1)};
}

Reports inverse_sampler(std::uint64_t seed) {
  constexpr std::size_t kN = 100'000;
  const auto& p = reference_alpha1();
  const auto batch = sample(p, kN, seed);
  Reports out;
  out.push_back(ks_report("dist.inverse_sampler_ks", ks_statistic(batch, [&p](double y) {
                            return cdf(p, y);
                          }),
                          kN));
  double sum = 0.0;
  for (double v : batch.values) sum += v;
  out.push_back(ValidationReport::make("dist.inverse_sampler_mean",
                                       std::abs(sum / kN - mean(p)), 0.02, kN));
  return out;
}

// ------------------------------------------------------------------- skew

constexpr std::array<double, 7> kSkews = {0.0, 1.0, -1.0, 5.0, -5.0, 20.0, -20.0};

Reports skew_shape_checks() {
  Reports out;
  const GridSpec grid(-15.0, 15.0, 0.01);
  const auto base = GqldParams::symmetric(2.0, 2.0);
  for (double a : kSkews) {
    const SkewParams s(base, a);
    const std::string tag = "[skew=" + format_double(a) + "]";
    // A different rule from the one that computed K; tails beyond 80 are below e^-160.
    const auto integral = oracle::integrate_interval([&s](double y) { return skew_pdf(s, y); },
                                                     -80.0, 80.0, 1e-12);
    out.push_back(ValidationReport::make(
        "skew.normalization" + tag,
        std::max(std::abs(integral.value - 1.0), std::abs(2.0 * s.norm_const() - 1.0)), 1e-8, 1));
    auto lc = check_log_concavity(s, grid);
    lc.check_name = "skew.log_concavity" + tag;
    out.push_back(lc);

    // Unimodality: exactly one sign change in the first differences.
    int changes = 0;
    double prev_diff = 0.0;
    double prev = skew_pdf(s, grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double cur = skew_pdf(s, grid[i]);
      const double d = cur - prev;
      if (d != 0.0) {
        if (prev_diff != 0.0 && (d > 0.0) != (prev_diff > 0.0)) ++changes;
        prev_diff = d;
      }
      prev = cur;
    }
    out.push_back(ValidationReport::make("skew.unimodal" + tag, std::abs(changes - 1), 0.0,
                                         grid.size()));

    if (a > 0.0) {
      const SkewParams mirror(base, -a);
      double worst = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        worst = std::max(worst, std::abs(skew_pdf(mirror, grid[i]) - skew_pdf(s, -grid[i])));
      }
      out.push_back(ValidationReport::make("skew.reflection" + tag, worst, 1e-12, grid.size()));
    }
    if (a == 0.0) {
      double worst = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        worst = std::max(worst, std::abs(skew_pdf(s, grid[i]) - pdf(base, grid[i])));
      }
      out.push_back(ValidationReport::make("skew.zero_skew_is_base", worst, 1e-12, grid.size()));
    }
  }
  auto tail = check_tail_limit(SkewParams(base, 20.0));
  tail.check_name = "skew.half_limit_distance_decreases";
  out.push_back(tail);
  return out;
}

Reports skew_sampling(std::uint64_t seed) {
  Reports out;
  const auto base = GqldParams::symmetric(2.0, 2.0);
  {
    constexpr std::size_t kN = 100'000;
    const SkewParams s(base, 5.0);
    const auto batch = skew_sample(s, kN, seed);
    std::vector<double> sorted = batch.values;
    std::sort(sorted.begin(), sorted.end());
    const auto cdfs = skew_cdf_sorted(s, sorted);
    out.push_back(ks_report("skew.sampler_ks[skew=5]", ks_from_sorted_cdf(cdfs), kN));
  }
  {
    constexpr std::size_t kN = 100'000;
    const auto res = skew_sample_with_stats(SkewParams(base, 0.0), kN, seed + 1);
    out.push_back(ValidationReport::make("skew.zero_skew_acceptance_rate",
                                         std::abs(res.acceptance_rate() - 0.5), 0.01,
                                         res.proposals));
  }
  constexpr std::size_t kN = 1'000'000;
  for (double a : kSkews) {
    if (a == 0.0) continue;
    const auto batch = skew_sample(SkewParams(base, a), kN, seed + 2);
    double m = 0.0;
    for (double v : batch.values) m += v;
    m /= kN;
    double m3 = 0.0;
    for (double v : batch.values) m3 += (v - m) * (v - m) * (v - m);
    m3 /= kN;
    // Statistic is -sign(skew) * m3: non-positive when the skewness sign is right.
    out.push_back(ValidationReport::make("skew.sample_skewness_sign[skew=" + format_double(a) + "]",
                                         a > 0.0 ? -m3 : m3, 0.0, kN));
  }
  return out;
}

// ----------------------------------------------------------- characterize

constexpr std::array<double, 9> kIdentityGrid = {-5, -2, -1, -0.5, 0, 0.5, 1, 2, 5};

// Smallest k with P(X > k) < level for X ~ Binomial(n, p).
int binomial_upper_critical(int n, double p, double level) {
  double tail = 1.0;
  for (int k = 0; k <= n; ++k) {
    const double log_pmf = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                           k * std::log(p) + (n - k) * std::log1p(-p);
    tail -= std::exp(log_pmf);
    if (tail < level) return k;
  }
  return n;
}

// Counts seed pairs whose two-sample KS rejects at 1%. Under the null the count is
// Binomial(100, 0.01), so the pass mark is that distribution's upper 1% point.
template <typename F, typename G>
ValidationReport two_sample_failures(std::string name, std::uint64_t seed, F&& first,
                                     G&& second) {
  constexpr std::uint64_t kPairs = 100;
  int failures = 0;
  double worst_p = 1.0;
  for (std::uint64_t k = 0; k < kPairs; ++k) {
    const auto x = first(seed + 2 * k);
    const auto y = second(seed + 2 * k + 1);
    const auto ks = ks_two_sample(x.values, y.values);
    if (ks.p_value < 0.01) ++failures;
    worst_p = std::min(worst_p, ks.p_value);
  }
  const int critical = binomial_upper_critical(static_cast<int>(kPairs), 0.01, 0.01);
  auto r = ValidationReport::make(std::move(name), failures, critical, kPairs);
  r.note = "min_p=" + format_double(worst_p);
  return r;
}

Reports exponential_transform_checks(std::uint64_t seed) {
  constexpr std::size_t kN = 100'000;
  Reports out;
  const auto& p = reference_alpha1();
  const auto cdf1 = [&p](double y) { return cdf_alpha1(p, y); };
  const auto batch = sample_exponential_transform(p, kN, seed);
  out.push_back(ks_report("thm.exponential_ks", ks_statistic(batch, cdf1), kN));

  std::vector<double> back(batch.values.size());
  std::transform(batch.values.begin(), batch.values.end(), back.begin(),
                 [&p](double y) { return gqld_to_exponential(p, y); });
  const double rate = p.delta();
  out.push_back(ks_report("thm.exponential_roundtrip_ks",
                          ks_statistic(back, [rate](double x) { return -std::expm1(-rate * x); }),
                          kN));

  out.push_back(two_sample_failures(
      "thm.exponential_vs_inverse_two_sample_failures_of_100", seed + 2000,
      [&p](std::uint64_t s) { return sample_exponential_transform(p, kN, s); },
      [&p](std::uint64_t s) { return sample(p, kN, s); }));

  int failures = 0;
  const double crit = ks_threshold(kN);
  for (std::uint64_t k = 0; k < 100; ++k) {
    if (ks_statistic(sample_exponential_transform(p, kN, seed + 1000 + k), cdf1).statistic > crit)
      ++failures;
  }
  out.push_back(
      ValidationReport::make("thm.exponential_ks_seed_failures_of_100", failures, 1.0, 100));
  return out;
}

Reports student_transform_checks(std::uint64_t seed) {
  constexpr std::size_t kN = 100'000;
  Reports out;
  for (int m : {1, 5, 30}) {
    const StudentTransform st{.m = m, .a = 1.0, .q = 2.0};
    const auto target = st.target();
    const auto batch = sample_student_transform(st, kN, seed + static_cast<std::uint64_t>(m));
    out.push_back(ks_report("thm.student_ks[m=" + std::to_string(m) + "]",
                            ks_statistic(batch, [&target](double y) { return cdf(target, y); }),
                            kN));
  }
  const StudentTransform st{.m = 5, .a = 1.0, .q = 2.0};
  const auto target = st.target();
  out.push_back(two_sample_failures(
      "thm.student_vs_inverse_two_sample_failures_of_100", seed + 4000,
      [&st](std::uint64_t s) { return sample_student_transform(st, kN, s); },
      [&target](std::uint64_t s) { return sample(target, kN, s); }));
  return out;
}

Reports identity_checks(Uniform& u) {
  double worst1 = 0.0;
  double worst2 = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto p1 = random_alpha1(u);
    worst1 = std::max(worst1, verify_exponential_charfn_identity(p1, kIdentityGrid).statistic);
    const int m = u.integer(2, 30);
    const StudentTransform st{.m = m,
                              .a = u(0.5, 2.0),
                              .q = u(1.1, 3.0),
                              .mu = u(-2.0, 2.0),
                              .theta = u(0.2, 0.9) * m / 10.0};
    worst2 = std::max(worst2, verify_student_charfn_identity(st, kIdentityGrid).statistic);
  }
  const StudentTransform st{.m = 5, .a = 1.0, .q = 2.0};
  const double even = std::abs(student_side_charfn(st, 1.0, true) -
                               student_side_charfn(st, 1.0, false));
  return {ValidationReport::make("thm.exponential_charfn_identity", worst1, 1e-6,
                                 10 * kIdentityGrid.size()),
          ValidationReport::make("thm.student_charfn_identity", worst2, 1e-6,
                                 10 * kIdentityGrid.size()),
          ValidationReport::make("thm.student_even_integrand", even, 1e-9, 1)};
}

void append(Reports& dst, Reports src) {
  dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::kAll;
  if (name == "special") return Suite::kSpecial;
  if (name == "dist") return Suite::kDist;
  if (name == "skew") return Suite::kSkew;
  if (name == "thm") return Suite::kThm;
  return std::nullopt;
}

std::vector<ValidationReport> special_battery(std::uint64_t seed) {
  Uniform u(seed);
  return {inc_beta_symmetry(u), gamma_recurrence(u), gamma_real_axis(), digamma_difference(),
          hyp2f1_use_site(u), quadrature_honesty(), quadrature_normal()};
}

std::vector<ValidationReport> distribution_battery(std::uint64_t seed) {
  Uniform u(seed ^ 0x5151);
  Reports out = {normalization(u), cdf_derivative(u), alpha1_closed_forms(u),
                 quantile_roundtrip(u)};
  append(out, ifr_checks(u));
  append(out, mode_ordering());
  append(out, q1_limit());
  append(out, moments_vs_quadrature(u));
  append(out, charfn_checks(u));
  append(out, inverse_sampler(seed));
  return out;
}

std::vector<ValidationReport> skew_battery(std::uint64_t seed) {
  Reports out = skew_shape_checks();
  append(out, skew_sampling(seed));
  return out;
}

std::vector<ValidationReport> characterize_battery(std::uint64_t seed) {
  Uniform u(seed ^ 0x7a7a);
  Reports out = exponential_transform_checks(seed);
  append(out, student_transform_checks(seed));
  append(out, identity_checks(u));
  return out;
}

std::vector<ValidationReport> run(Suite suite, std::uint64_t seed) {
  Reports out;
  if (suite == Suite::kAll || suite == Suite::kSpecial) append(out, special_battery(seed));
  if (suite == Suite::kAll || suite == Suite::kDist) append(out, distribution_battery(seed));
  if (suite == Suite::kAll || suite == Suite::kSkew) append(out, skew_battery(seed));
  if (suite == Suite::kAll || suite == Suite::kThm) append(out, characterize_battery(seed));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.check_name < b.check_name;
  });
  return out;
}

}  // namespace gqld::validation
