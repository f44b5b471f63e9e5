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

#ifndef GQLD_ORACLE_H_
#define GQLD_ORACLE_H_

#include <cstddef>
#include <functional>

#include "gqld/report.h"
#include "gqld/special_fns.h"

// Brute-force numerical referees: adaptive Gauss-Kronrod quadrature on
// compactified infinite ranges and grid-based shape checks. Nothing here
// knows about the q-logistic family.
namespace gqld::oracle {

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<ComplexValue(double)>;

inline constexpr std::size_t kMaxPanels = 10'000;

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct ComplexQuadratureResult {
  ComplexValue value;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

// y = center + scale * atanh(u), u in (-1, 1). An integrand decaying like
// exp(-r |y|) becomes (1 - |u|)^(r * scale / 2 - 1) near the endpoints, so
// pick scale >= 4 / r for a smooth transformed integrand.
struct LineMap {
  double center = 0.0;
  double scale = 1.0;
};

enum class HalfLineMap {
  kExponential,  // x = -scale * ln(v); for exponentially decaying tails
  kAlgebraic,    // x = scale * v / (1 - v); for power-law tails
};

/// Globally adaptive GK15 on the finite interval [lo, hi]. The panel with
/// the largest |K15 - G7| is bisected until the summed estimate is below
/// tol or max_panels is reached (then converged = false).
QuadratureResult integrate_interval(const RealFunction& f, double lo, double hi, double tol,
                                    std::size_t max_panels = kMaxPanels);
ComplexQuadratureResult integrate_interval_complex(const ComplexFunction& f, double lo, double hi,
                                                   double tol,
                                                   std::size_t max_panels = kMaxPanels);

/// Integral over the whole real line through the tanh compactification.
QuadratureResult integrate_line(const RealFunction& f, double tol, LineMap map = {});
ComplexQuadratureResult integrate_line_complex(const ComplexFunction& f, double tol,
                                               LineMap map = {});

/// Integral over (0, inf).
QuadratureResult integrate_halfline(const RealFunction& f, double tol, double scale = 1.0,
                                    HalfLineMap map = HalfLineMap::kExponential);
ComplexQuadratureResult integrate_halfline_complex(const ComplexFunction& f, double tol,
                                           double scale = 1.0,
                                           HalfLineMap map = HalfLineMap::kExponential);

/// k-th raw moment of a density over the real line.
QuadratureResult moment(const RealFunction& pdf, int k, double tol, LineMap map = {});

/// Second central differences on n equally spaced points of [lo, hi] must
/// be >= -1e-9. The statistic is the largest violation (0 when convex).
ValidationReport grid_convexity(const RealFunction& f, double lo, double hi, std::size_t n);

/// First differences on n equally spaced points of [lo, hi] must be
/// >= -1e-12. The statistic is the largest decrease (0 when monotone).
ValidationReport grid_monotone(const RealFunction& f, double lo, double hi, std::size_t n);

}  // namespace gqld::oracle

#endif  // GQLD_ORACLE_H_
