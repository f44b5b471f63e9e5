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

#ifndef GQLD_CHARACTERIZE_H_
#define GQLD_CHARACTERIZE_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "gqld/distribution.h"
#include "gqld/ks.h"
#include "gqld/random.h"
#include "gqld/report.h"

// Executable forms of the two characterizations of the q-logistic family:
//
//  * exponential: x ~ Exp(r)  <=>  y = mu + theta ln[(e^x - 1)/(a(q-1))] is
//    GqLD with alpha = 1 and delta = r, i.e. survival (1 + s)^{-r}. A source
//    rate b/(q-1) therefore lands on exponent beta/(q-1) = b/(q-1) + 1;
//  * Student t:   x ~ t(m)  =>  y = mu + theta ln[x^2/(a m (q-1))] is GqLD with
//    alpha = 1/2 and beta/(q-1) = (m+1)/2.
//
// The converse directions are checked through characteristic functions:
// quadrature against the source density on one side, gamma ratios on the
// other.
namespace gqld {

// Parameters of the Student-t construction.
struct StudentTransform {
  int m = 1;  // degrees of freedom
  double a = 1.0;
  double q = 2.0;
  double mu = 0.0;
  double theta = 1.0;

  /// Throws DomainError unless m >= 1, a > 0, q > 1, theta > 0.
  void validate() const;
  /// GqLD(alpha = 1/2, beta = (m+1)(q-1)/2, a, q, mu, theta).
  GqldParams target() const;
};

/// y = mu + theta ln[expm1(x) / (a(q-1))].
double exponential_to_gqld(const GqldParams& p, double x);
/// x = ln(1 + a(q-1) e^z); the inverse of exponential_to_gqld.
double gqld_to_exponential(const GqldParams& p, double y);
/// y = mu + theta ln[x^2 / (a m (q-1))].
double student_to_gqld(const StudentTransform& t, double x);

/// Exponential draws (inverse transform, rate p.delta()) pushed through
/// exponential_to_gqld. Requires alpha == 1.
SampleBatch sample_exponential_transform(const GqldParams& p, std::size_t n, std::uint64_t seed);

/// t(m) draws as Z / sqrt(V / m), V a sum of m squared normals for m <= 50
/// and a gamma variate otherwise, pushed through student_to_gqld.
SampleBatch sample_student_transform(const StudentTransform& t, std::size_t n, std::uint64_t seed);

/// e^{it mu} * integral over x > 0 of [(e^x - 1)/(a(q-1))]^{it theta}
/// times the Exp(p.delta()) density. Throws ConvergenceError on failure.
ComplexValue exponential_side_charfn(const GqldParams& p, double t);

/// Quadrature of e^{it[mu + theta ln(x^2/(a(q-1)m))]} against the t(m)
/// density. `doubled` integrates (0, inf) and doubles it; otherwise both
/// half-lines are integrated separately.
ComplexValue student_side_charfn(const StudentTransform& st, double t, bool doubled = true);

/// e^{it mu} [a(q-1)]^{-it theta} Gamma(1/2 + it theta) Gamma(m/2 - it theta)
///   / (Gamma(m/2) Gamma(1/2)).
ComplexValue student_closed_charfn(const StudentTransform& st, double t);

/// max |exponential_side_charfn - char_fn| over the grid, threshold 1e-6.
/// Requires alpha == 1 and |t| <= 10.
ValidationReport verify_exponential_charfn_identity(const GqldParams& p,
                                                    std::span<const double> t_grid);

/// max |student_side_charfn - student_closed_charfn| over the grid,
/// threshold 1e-6. Requires |t| theta < m / 2.
ValidationReport verify_student_charfn_identity(const StudentTransform& st,
                                             std::span<const double> t_grid);

}  // namespace gqld

#endif  // GQLD_CHARACTERIZE_H_
