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

#ifndef GQLD_SPECIAL_FNS_H_
#define GQLD_SPECIAL_FNS_H_

#include <complex>

namespace gqld {

// Real/imaginary pair used for characteristic functions and complex gamma.
using ComplexValue = std::complex<double>;

namespace special {

/// ln Gamma(x) for x > 0. Throws DomainError for x <= 0 or non-finite x.
double ln_gamma(double x);

/// ln Gamma(x) - ln Gamma(y) without cancellation when x and y are large and
/// close (used for Gamma(b/(q-1)) / Gamma(b/(q-1) - alpha) as q -> 1).
double ln_gamma_ratio(double x, double y);

/// ln B(p, q).
double ln_beta(double p, double q);

/// A logarithm of Gamma(z) for Re z > 0 (exponentiate for Gamma), via the Lanczos
/// approximation (g = 7, nine coefficients).
ComplexValue ln_gamma_complex(ComplexValue z);

/// Gamma(z) for Re z > 0. Throws DomainError when Re z <= 0.
ComplexValue gamma_complex(ComplexValue z);

/// Digamma psi(x), x > 0; absolute error below 1e-12.
double digamma(double x);

/// Trigamma psi'(x), x > 0; absolute error below 1e-10.
double trigamma(double x);

/// Gauss hypergeometric 2F1(a, b; c; z) for real z <= 1.
///
/// Uses the power series for -0.5 <= z < 1, the Pfaff transformation
/// 2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1)) for z < -0.5, and the
/// Gauss summation at z = 1. The series stops once a term falls below
/// 1e-15 of the running sum; more than 1e6 terms throws ConvergenceError.
/// A pole of c (c a non-positive integer) throws DomainError.
double hyp2f1(double a, double b, double c, double z);

/// Regularized incomplete beta I_x(p, q), 0 <= x <= 1, p, q > 0.
///
/// Modified Lentz continued fraction, evaluated directly when
/// x < (p+1)/(p+q+2) and through I_x(p,q) = 1 - I_{1-x}(q,p) otherwise.
double reg_inc_beta(double x, double p, double q);

/// ln I_x(p, q); stays finite where I_x itself underflows.
double log_reg_inc_beta(double x, double p, double q);

/// ln(1 + e^u) without overflow.
double log1p_exp(double u);

}  // namespace special
}  // namespace gqld

#endif  // GQLD_SPECIAL_FNS_H_
