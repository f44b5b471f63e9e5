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

#include "gqld/distribution.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gqld/error.h"
#include "gqld/format.h"

namespace gqld {
namespace {

using special::log1p_exp;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSurvivalFloor = 1e-300;

void check(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void check_finite_point(double y, const char* op) {
  if (std::isnan(y)) throw DomainError(std::string(op) + ": argument is NaN");
}

void check_alpha1(const GqldParams& p, const char* op) {
  if (p.alpha() != 1.0) {
    throw DomainError(std::string(op) + ": closed form requires alpha == 1");
  }
}

double log_survival(const GqldParams& p, double y) {
  if (y == -kInf) return 0.0;
  if (y == kInf) return -kInf;
  const double u = p.log_odds(y);
  const double wc = 1.0 / (1.0 + std::exp(u));
  return std::log(special::reg_inc_beta(wc, p.delta(), p.alpha()));
}

}  // namespace

GqldParams::GqldParams(const Fields& f) : f_(f) {
  check(std::isfinite(f.alpha) && f.alpha > 0.0, "alpha must be finite and > 0");
  check(std::isfinite(f.beta) && f.beta > 0.0, "beta must be finite and > 0");
  check(std::isfinite(f.a) && f.a > 0.0, "a must be finite and > 0");
  check(std::isfinite(f.q) && f.q > 1.0, "q must be finite and > 1");
  check(std::isfinite(f.mu), "mu must be finite");
  check(std::isfinite(f.theta) && f.theta > 0.0, "theta must be finite and > 0");
  exponent_ = f.beta / (f.q - 1.0);
  delta_ = exponent_ - f.alpha;
  check(std::isfinite(exponent_) && delta_ > 0.0,
        "delta = beta/(q-1) - alpha must be > 0 (normalizability)");
  log_scale_ = std::log(f.a) + std::log(f.q - 1.0);
  log_c_ = f.alpha * log_scale_ - std::log(f.theta) +
           special::ln_gamma_ratio(exponent_, delta_) - special::ln_gamma(f.alpha);
}

GqldParams GqldParams::symmetric(double alpha, double q) {
  return GqldParams(Fields{.alpha = alpha,
                           .beta = 2.0 * alpha * (q - 1.0),
                           .a = 1.0 / (q - 1.0),
                           .q = q,
                           .mu = 0.0,
                           .theta = 1.0});
}

oracle::LineMap GqldParams::line_map() const {
  const double mode = f_.mu + f_.theta * (std::log(f_.alpha / delta_) - log_scale_);
  const double slowest = std::min(f_.alpha, delta_);
  return {mode, f_.theta * std::max(1.0, 4.0 / slowest)};
}

std::string GqldParams::fingerprint() const {
  return "alpha=" + format_double(f_.alpha) + ";beta=" + format_double(f_.beta) +
         ";a=" + format_double(f_.a) + ";q=" + format_double(f_.q) +
         ";mu=" + format_double(f_.mu) + ";theta=" + format_double(f_.theta);
}

ExtremeValueParams::ExtremeValueParams(const Fields& f) : f_(f) {
  check(std::isfinite(f.alpha) && f.alpha > 0.0, "alpha must be finite and > 0");
  check(std::isfinite(f.beta) && f.beta > 0.0, "beta must be finite and > 0");
  check(std::isfinite(f.a) && f.a > 0.0, "a must be finite and > 0");
  check(std::isfinite(f.mu), "mu must be finite");
  check(std::isfinite(f.theta) && f.theta > 0.0, "theta must be finite and > 0");
  log_c1_ = f.alpha * std::log(f.a * f.beta) - special::ln_gamma(f.alpha) - std::log(f.theta);
}

double normalizing_constant(const GqldParams& p) {
  const double lc = p.log_normalizing_constant();
  if (lc > std::log(std::numeric_limits<double>::max())) {
    throw RangeError("normalizing_constant: C overflows double precision");
  }
  return std::exp(lc);
}

double log_pdf(const GqldParams& p, double y) {
  check_finite_point(y, "pdf");
  if (std::isinf(y)) return -kInf;
  const double z = (y - p.mu()) / p.theta();
  return p.log_normalizing_constant() + p.alpha() * z -
         p.exponent() * log1p_exp(z + p.log_scale());
}

double pdf(const GqldParams& p, double y) { return std::exp(log_pdf(p, y)); }

double log_pdf_limit_q1(const ExtremeValueParams& p, double y) {
  check_finite_point(y, "pdf_limit_q1");
  if (std::isinf(y)) return -kInf;
  const double z = (y - p.mu()) / p.theta();
  return p.log_normalizing_constant() + p.alpha() * z - p.a() * p.beta() * std::exp(z);
}

double pdf_limit_q1(const ExtremeValueParams& p, double y) {
  return std::exp(log_pdf_limit_q1(p, y));
}

double cdf(const GqldParams& p, double t) {
  check_finite_point(t, "cdf");
  if (t == -kInf) return 0.0;
  if (t == kInf) return 1.0;
  const double w = 1.0 / (1.0 + std::exp(-p.log_odds(t)));
  return special::reg_inc_beta(w, p.alpha(), p.delta());
}

double log_cdf(const GqldParams& p, double t) {
  check_finite_point(t, "log_cdf");
  if (t == -kInf) return -kInf;
  if (t == kInf) return 0.0;
  const double u = p.log_odds(t);
  if (u < -700.0) {
    // w = e^u / (1 + e^u) is subnormal here; ln I_w ~ alpha u - ln(alpha B(alpha, delta)).
    return p.alpha() * u - std::log(p.alpha()) - special::ln_beta(p.alpha(), p.delta());
  }
  return special::log_reg_inc_beta(1.0 / (1.0 + std::exp(-u)), p.alpha(), p.delta());
}

// Beyond s = 9 the transformed series argument s/(1+s) exceeds 0.9 and
// needs O(1/(1-w)) terms when delta is small.
constexpr double kHypRightTailLogOdds = 2.1972245773362196;  // ln 9

double cdf_hyp2f1(const GqldParams& p, double t) {
  check_finite_point(t, "cdf_hyp2f1");
  if (t == -kInf) return 0.0;
  const double u = p.log_odds(t);
  if (u > kHypRightTailLogOdds) {
    // 1 - x^delta / (delta B(delta, alpha)) 2F1(delta, 1 - alpha; delta + 1; x), x = 1/(1+s)
    const double log_x = -special::log1p_exp(u);
    const double log_factor =
        p.delta() * log_x - std::log(p.delta()) - special::ln_beta(p.delta(), p.alpha());
    return 1.0 - std::exp(log_factor) * special::hyp2f1(p.delta(), 1.0 - p.alpha(),
                                                        p.delta() + 1.0, std::exp(log_x));
  }
  const double log_factor = special::ln_gamma_ratio(p.exponent(), p.delta()) -
                            special::ln_gamma(p.alpha()) + p.alpha() * u -
                            std::log(p.alpha());
  return std::exp(log_factor) *
         special::hyp2f1(p.alpha(), p.exponent(), p.alpha() + 1.0, -std::exp(u));
}

double cdf_alpha1(const GqldParams& p, double y) {
  check_alpha1(p, "cdf_alpha1");
  check_finite_point(y, "cdf_alpha1");
  if (y == -kInf) return 0.0;
  if (y == kInf) return 1.0;
  return -std::expm1(-p.delta() * log1p_exp(p.log_odds(y)));
}

double survival(const GqldParams& p, double y) {
  check_finite_point(y, "survival");
  if (y == -kInf) return 1.0;
  if (y == kInf) return 0.0;
  const double wc = 1.0 / (1.0 + std::exp(p.log_odds(y)));
  return special::reg_inc_beta(wc, p.delta(), p.alpha());
}

double survival_alpha1(const GqldParams& p, double y) {
  check_alpha1(p, "survival_alpha1");
  check_finite_point(y, "survival_alpha1");
  if (y == -kInf) return 1.0;
  if (y == kInf) return 0.0;
  return std::exp(-p.delta() * log1p_exp(p.log_odds(y)));
}

double hazard(const GqldParams& p, double t) {
  check_finite_point(t, "hazard");
  if (t == -kInf) return 0.0;
  const double ls = log_survival(p, t);
  if (!(ls > std::log(kSurvivalFloor))) {
    throw RangeError("hazard: survival underflows below 1e-300 at t = " + format_double(t));
  }
  return std::exp(log_pdf(p, t) - ls);
}

double cumulative_hazard(const GqldParams& p, double t) {
  check_finite_point(t, "cumulative_hazard");
  const double ls = log_survival(p, t);
  if (!(ls > std::log(kSurvivalFloor))) {
    throw RangeError("cumulative_hazard: survival underflows below 1e-300 at t = " +
                     format_double(t));
  }
  return -ls;
}

double quantile(const GqldParams& p, double prob) {
  if (!(prob > 0.0 && prob < 1.0)) throw DomainError("quantile: prob must lie in (0, 1)");
  const double al = p.alpha();
  const double de = p.delta();
  const double ln_b = special::ln_beta(al, de);
  const bool lower = prob <= 0.5;
  const double target = lower ? prob : 1.0 - prob;

  // g is increasing in the log-odds u for both tails; g' is the density of u.
  auto g = [&](double u) {
    if (lower) return special::reg_inc_beta(1.0 / (1.0 + std::exp(-u)), al, de) - target;
    return target - special::reg_inc_beta(1.0 / (1.0 + std::exp(u)), de, al);
  };

  double u;
  if (target < 0.05) {
    u = lower ? (std::log(target * al) + ln_b) / al : -(std::log(target * de) + ln_b) / de;
  } else {
    u = std::log(al / de);
  }
  double lo = -kInf;
  double hi = kInf;
  for (int iter = 0; iter < 300; ++iter) {
    const double f = g(u);
    if (f == 0.0 || std::abs(f) <= 1e-15 * target) break;
    if (f < 0.0) {
      lo = u;
    } else {
      hi = u;
    }
    const double w = 1.0 / (1.0 + std::exp(-u));
    const double dens = std::exp(-al * log1p_exp(-u) - de * log1p_exp(u) - ln_b);
    const double dlog = al * (1.0 - w) - de * w;
    const double newton = f / dens;
    const double denom = 1.0 - 0.5 * newton * dlog;
    double next = u - (denom > 0.5 ? newton / denom : newton);
    if (!std::isfinite(next) || !(next > lo && next < hi)) {
      if (!std::isfinite(lo)) {
        next = hi - 2.0 * std::max(1.0, std::abs(hi));
      } else if (!std::isfinite(hi)) {
        next = lo + 2.0 * std::max(1.0, std::abs(lo));
      } else {
        next = 0.5 * (lo + hi);
      }
    }
    const bool done = std::abs(next - u) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                                  std::max(1.0, std::abs(u));
    u = next;
    if (done) break;
  }
  return p.mu() + p.theta() * (u - p.log_scale());
}

double mean(const GqldParams& p) {
  return p.mu() +
         p.theta() * (special::digamma(p.alpha()) - special::digamma(p.delta()) - p.log_scale());
}

double variance(const GqldParams& p) {
  return p.theta() * p.theta() * (special::trigamma(p.alpha()) + special::trigamma(p.delta()));
}

ComplexValue char_fn(const GqldParams& p, double t) {
  if (std::isnan(t)) throw DomainError("char_fn: argument is NaN");
  if (t == 0.0) return {1.0, 0.0};
  const double tau = t * p.theta();
  // Normalize with the same Lanczos evaluation so |phi(t)| <= 1 is not
  // spoiled by a mismatch between two log-gamma implementations.
  const double norm = special::ln_gamma_complex(p.alpha()).real() +
                      special::ln_gamma_complex(p.delta()).real();
  const ComplexValue log_phi = ComplexValue(0.0, t * p.mu() - tau * p.log_scale()) +
                               special::ln_gamma_complex({p.alpha(), tau}) +
                               special::ln_gamma_complex({p.delta(), -tau}) - norm;
  return std::exp(log_phi);
}

SampleBatch sample(const GqldParams& p, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw DomainError("sample: n must be >= 1");
  Rng rng(seed);
  SampleBatch batch{{}, seed, SampleSource::kInverseCdf, p.fingerprint()};
  batch.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) batch.values.push_back(quantile(p, open_uniform(rng)));
  return batch;
}

double draw_type2_beta(const GqldParams& p, Rng& rng) {
  std::gamma_distribution<double> shape_left(p.alpha(), 1.0);
  std::gamma_distribution<double> shape_right(p.delta(), 1.0);
  const double g1 = shape_left(rng);
  const double g2 = shape_right(rng);
  return p.mu() + p.theta() * (std::log(g1) - std::log(g2) - p.log_scale());
}

}  // namespace gqld
