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

#include "gqld/characterize.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "gqld/error.h"
#include "gqld/format.h"
#include "gqld/oracle.h"

namespace gqld {
namespace {

constexpr double kQuadTol = 1e-10;
constexpr double kIdentityTol = 1e-6;

// ln(e^x - 1) for x > 0.
double log_expm1(double x) {
  if (x > 30.0) return x + std::log1p(-std::exp(-x));
  return std::log(std::expm1(x));
}

double student_log_norm(int m) {
  const double md = m;
  return special::ln_gamma(0.5 * (md + 1.0)) - special::ln_gamma(0.5 * md) -
         0.5 * std::log(std::numbers::pi * md);
}

ComplexValue check_converged(const oracle::ComplexQuadratureResult& r, const char* what) {
  if (!r.converged) {
    throw ConvergenceError(std::string(what) + ": quadrature did not converge (estimate " +
                           format_double(r.abs_error_estimate) + ")");
  }
  return r.value;
}

std::string t_fingerprint(const StudentTransform& t) {
  return "m=" + std::to_string(t.m) + ";a=" + format_double(t.a) + ";q=" + format_double(t.q) +
         ";mu=" + format_double(t.mu) + ";theta=" + format_double(t.theta);
}

}  // namespace

void StudentTransform::validate() const {
  if (m < 1) throw DomainError("m must be a positive integer");
  if (!(std::isfinite(a) && a > 0.0)) throw DomainError("a must be finite and > 0");
  if (!(std::isfinite(q) && q > 1.0)) throw DomainError("q must be finite and > 1");
  if (!std::isfinite(mu)) throw DomainError("mu must be finite");
  if (!(std::isfinite(theta) && theta > 0.0)) throw DomainError("theta must be finite and > 0");
}

GqldParams StudentTransform::target() const {
  validate();
  return GqldParams({.alpha = 0.5,
                     .beta = 0.5 * (m + 1.0) * (q - 1.0),
                     .a = a,
                     .q = q,
                     .mu = mu,
                     .theta = theta});
}

double exponential_to_gqld(const GqldParams& p, double x) {
  return p.mu() + p.theta() * (log_expm1(x) - p.log_scale());
}

double gqld_to_exponential(const GqldParams& p, double y) {
  return special::log1p_exp(p.log_odds(y));
}

double student_to_gqld(const StudentTransform& t, double x) {
  return t.mu + t.theta * (std::log(x * x / t.m) - std::log(t.a) - std::log(t.q - 1.0));
}

SampleBatch sample_exponential_transform(const GqldParams& p, std::size_t n, std::uint64_t seed) {
  if (p.alpha() != 1.0) throw DomainError("sample_exponential_transform: requires alpha == 1");
  if (n < 1) throw DomainError("sample_exponential_transform: n must be >= 1");
  Rng rng(seed);
  const double rate = p.delta();
  SampleBatch batch{{}, seed, SampleSource::kExponentialTransform, p.fingerprint()};
  batch.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -std::log(open_uniform(rng)) / rate;
    batch.values.push_back(exponential_to_gqld(p, x));
  }
  return batch;
}

SampleBatch sample_student_transform(const StudentTransform& t, std::size_t n, std::uint64_t seed) {
  t.validate();
  if (n < 1) throw DomainError("sample_student_transform: n must be >= 1");
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::gamma_distribution<double> chi2(0.5 * t.m, 2.0);
  SampleBatch batch{{}, seed, SampleSource::kStudentTransform, t_fingerprint(t)};
  batch.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = normal(rng);
    double v = 0.0;
    if (t.m <= 50) {
      for (int k = 0; k < t.m; ++k) {
        const double g = normal(rng);
        v += g * g;
      }
    } else {
      v = chi2(rng);
    }
    batch.values.push_back(student_to_gqld(t, z / std::sqrt(v / t.m)));
  }
  return batch;
}

ComplexValue exponential_side_charfn(const GqldParams& p, double t) {
  if (p.alpha() != 1.0) throw DomainError("exponential_side_charfn: requires alpha == 1");
  const double rate = p.delta();
  const double tau = t * p.theta();
  const double log_rate = std::log(rate);
  const oracle::ComplexFunction integrand = [&](double x) -> ComplexValue {
    if (!(x > 0.0)) return {};
    const double amp = std::exp(log_rate - rate * x);
    if (amp == 0.0) return {};
    return std::polar(amp, tau * (log_expm1(x) - p.log_scale()));
  };
  const auto r = oracle::integrate_halfline_complex(integrand, kQuadTol, 2.0 / rate);
  return std::polar(1.0, t * p.mu()) * check_converged(r, "exponential_side_charfn");
}

ComplexValue student_side_charfn(const StudentTransform& st, double t, bool doubled) {
  st.validate();
  const double tau = t * st.theta;
  const double md = st.m;
  const double log_norm = student_log_norm(st.m);
  const double shift = std::log(st.a) + std::log(st.q - 1.0) + std::log(md);
  const oracle::ComplexFunction integrand = [&](double x) -> ComplexValue {
    if (x == 0.0) return {};
    const double amp = std::exp(log_norm - 0.5 * (md + 1.0) * std::log1p(x * x / md));
    if (amp == 0.0) return {};
    return std::polar(amp, tau * (std::log(x * x) - shift));
  };
  const double scale = std::sqrt(md);
  ComplexValue value;
  if (doubled) {
    const auto r = oracle::integrate_halfline_complex(integrand, kQuadTol, scale,
                                                      oracle::HalfLineMap::kAlgebraic);
    value = 2.0 * check_converged(r, "student_side_charfn");
  } else {
    // Whole line through x = scale u / (1 - u^2), u in (-1, 1).
    const oracle::ComplexFunction on_line = [&](double u) -> ComplexValue {
      if (!(std::abs(u) < 1.0)) return {};
      const double w = (1.0 - u) * (1.0 + u);
      const double x = scale * u / w;
      const ComplexValue f = integrand(x);
      if (f == ComplexValue{}) return {};
      return f * (scale * (1.0 + u * u) / (w * w));
    };
    const auto r = oracle::integrate_interval_complex(on_line, -1.0, 1.0, kQuadTol);
    value = check_converged(r, "student_side_charfn");
  }
  return std::polar(1.0, t * st.mu) * value;
}

ComplexValue student_closed_charfn(const StudentTransform& st, double t) {
  st.validate();
  if (t == 0.0) return {1.0, 0.0};
  const double tau = t * st.theta;
  const double half_m = 0.5 * st.m;
  if (!(std::abs(tau) < half_m)) {
    throw DomainError("student charfn identity: requires |t| theta < m / 2");
  }
  const double norm = special::ln_gamma_complex(0.5).real() +
                      special::ln_gamma_complex(half_m).real();
  const double log_scale = std::log(st.a) + std::log(st.q - 1.0);
  const ComplexValue log_phi = ComplexValue(0.0, t * st.mu - tau * log_scale) +
                               special::ln_gamma_complex({0.5, tau}) +
                               special::ln_gamma_complex({half_m, -tau}) - norm;
  return std::exp(log_phi);
}

ValidationReport verify_exponential_charfn_identity(const GqldParams& p,
                                             std::span<const double> t_grid) {
  if (p.alpha() != 1.0)
    throw DomainError("verify_exponential_charfn_identity: requires alpha == 1");
  double worst = 0.0;
  double where = std::numeric_limits<double>::quiet_NaN();
  for (double t : t_grid) {
    if (!(std::abs(t) <= 10.0))
      throw DomainError("verify_exponential_charfn_identity: |t| must be <= 10");
    const double d = std::abs(exponential_side_charfn(p, t) - char_fn(p, t));
    if (d >= worst) {
      worst = d;
      where = t;
    }
  }
  auto r = ValidationReport::make("exponential_charfn_identity[" + p.fingerprint() + "]", worst,
                                  kIdentityTol, t_grid.size());
  r.location = where;
  return r;
}

ValidationReport verify_student_charfn_identity(const StudentTransform& st,
                                             std::span<const double> t_grid) {
  st.validate();
  double worst = 0.0;
  double where = std::numeric_limits<double>::quiet_NaN();
  for (double t : t_grid) {
    const ComplexValue closed = student_closed_charfn(st, t);
    const double d = std::abs(student_side_charfn(st, t) - closed);
    if (d >= worst) {
      worst = d;
      where = t;
    }
  }
  auto r = ValidationReport::make("student_charfn_identity[" + t_fingerprint(st) + "]", worst,
                                  kIdentityTol, t_grid.size());
  r.location = where;
  return r;
}

}  // namespace gqld
