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

#ifndef GQLD_DISTRIBUTION_H_
#define GQLD_DISTRIBUTION_H_

#include <cstddef>
#include <cstdint>
#include <string>

#include "gqld/oracle.h"
#include "gqld/random.h"
#include "gqld/special_fns.h"

namespace gqld {

// Generalized q-logistic family GqLD(alpha, beta, a, q, mu, theta):
//
//   f(y) = C e^{alpha z} [1 + a(q-1) e^z]^{-beta/(q-1)},  z = (y - mu)/theta,
//
// the law of y = mu + theta ln x for x with density proportional to
// x^{alpha-1} [1 + a(q-1) x]^{-beta/(q-1)}. Writing s = a(q-1) e^z, s is
// beta-prime(alpha, delta) with delta = beta/(q-1) - alpha, which is the
// representation every routine below works in.
class GqldParams {
 public:
  struct Fields {
    double alpha = 1.0;
    double beta = 1.0;
    double a = 1.0;
    double q = 2.0;
    double mu = 0.0;
    double theta = 1.0;
  };

  /// Throws DomainError naming the violated constraint.
  explicit GqldParams(const Fields& f);

  /// Symmetric subfamily about 0: delta = alpha, a(q-1) = 1, mu = 0, theta = 1.
  static GqldParams symmetric(double alpha, double q);

  double alpha() const { return f_.alpha; }
  double beta() const { return f_.beta; }
  double a() const { return f_.a; }
  double q() const { return f_.q; }
  double mu() const { return f_.mu; }
  double theta() const { return f_.theta; }
  const Fields& fields() const { return f_; }

  /// beta / (q - 1).
  double exponent() const { return exponent_; }
  /// beta / (q - 1) - alpha; controls the right tail.
  double delta() const { return delta_; }
  /// ln(a (q - 1)).
  double log_scale() const { return log_scale_; }
  double log_normalizing_constant() const { return log_c_; }

  /// ln s = z + ln(a(q-1)) for an observation y.
  double log_odds(double y) const { return (y - f_.mu) / f_.theta + log_scale_; }

  /// Quadrature map centred at the mode with tails wide enough for the
  /// slowest exponential decay rate.
  oracle::LineMap line_map() const;

  /// "alpha=..;beta=..;a=..;q=..;mu=..;theta=.." with 17 significant digits.
  std::string fingerprint() const;

 private:
  Fields f_;
  double exponent_;
  double delta_;
  double log_scale_;
  double log_c_;
};

// The q -> 1 limit: f1(y) = C1 e^{alpha z} exp(-a beta e^z),
// C1 = (a beta)^alpha / (Gamma(alpha) theta).
class ExtremeValueParams {
 public:
  struct Fields {
    double alpha = 1.0;
    double beta = 1.0;
    double a = 1.0;
    double mu = 0.0;
    double theta = 1.0;
  };

  explicit ExtremeValueParams(const Fields& f);

  double alpha() const { return f_.alpha; }
  double beta() const { return f_.beta; }
  double a() const { return f_.a; }
  double mu() const { return f_.mu; }
  double theta() const { return f_.theta; }
  double log_normalizing_constant() const { return log_c1_; }

 private:
  Fields f_;
  double log_c1_;
};

/// C, computed in log-space. Throws RangeError if C overflows a double.
double normalizing_constant(const GqldParams& p);

double log_pdf(const GqldParams& p, double y);
double pdf(const GqldParams& p, double y);

double log_pdf_limit_q1(const ExtremeValueParams& p, double y);
double pdf_limit_q1(const ExtremeValueParams& p, double y);

/// F(t) = I_w(alpha, delta) with w = s / (1 + s).
double cdf(const GqldParams& p, double t);

/// ln F(t), finite far into the left tail where F underflows.
double log_cdf(const GqldParams& p, double t);

/// The hypergeometric form
///   Gamma(beta/(q-1)) / (Gamma(alpha) Gamma(delta)) * s^alpha / alpha
///     * 2F1(alpha, beta/(q-1); alpha + 1; -s).
/// For s > 9 the complementary form
///   1 - x^delta / (delta B(delta, alpha)) * 2F1(delta, 1 - alpha; delta + 1; x),
/// x = 1/(1+s), is summed instead; the direct series needs O(s) terms there.
/// Kept as an independent cross-check of cdf().
double cdf_hyp2f1(const GqldParams& p, double t);

/// Closed form 1 - (1 + s)^{-delta}, valid only for alpha == 1.
double cdf_alpha1(const GqldParams& p, double y);

/// 1 - F(y), evaluated as I_{1/(1+s)}(delta, alpha) to keep the right tail.
double survival(const GqldParams& p, double y);

/// Closed form (1 + s)^{-delta}, alpha == 1 only.
double survival_alpha1(const GqldParams& p, double y);

/// f(t) / (1 - F(t)). For alpha = 1 this is c e^z / (1 + s) with
/// c = a(q-1) delta / theta. Throws RangeError once survival < 1e-300.
double hazard(const GqldParams& p, double t);

/// -ln(1 - F(t)); RangeError once survival < 1e-300.
double cumulative_hazard(const GqldParams& p, double t);

/// Inverse CDF. Solves I_w(alpha, delta) = prob for the log-odds ln s with
/// a bracketed Halley iteration (bisection fallback), working on the
/// smaller tail so probabilities near 1 keep their precision.
double quantile(const GqldParams& p, double prob);

/// mu + theta (psi(alpha) - psi(delta) - ln(a(q-1))).
double mean(const GqldParams& p);
/// theta^2 (psi'(alpha) + psi'(delta)).
double variance(const GqldParams& p);

/// E[e^{ity}] = e^{it mu} [a(q-1)]^{-it theta}
///   Gamma(alpha + it theta) Gamma(delta - it theta) / (Gamma(alpha) Gamma(delta)).
ComplexValue char_fn(const GqldParams& p, double t);

/// n draws by inverse CDF through quantile().
SampleBatch sample(const GqldParams& p, std::size_t n, std::uint64_t seed);

/// One draw through the beta-prime representation: s = G1 / G2 with
/// G1 ~ Gamma(alpha), G2 ~ Gamma(delta), y = mu + theta (ln s - ln(a(q-1))).
double draw_type2_beta(const GqldParams& p, Rng& rng);

}  // namespace gqld

#endif  // GQLD_DISTRIBUTION_H_
