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

#ifndef GQLD_SKEW_H_
#define GQLD_SKEW_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gqld/distribution.h"
#include "gqld/grid.h"
#include "gqld/random.h"
#include "gqld/report.h"

namespace gqld {

// Skew q-logistic family: density proportional to F(skew * y) f(y), with f
// and F the density and CDF of a q-logistic base. Over a base symmetric
// about 0 the normalizer K = integral of F(skew y) f(y) is exactly 1/2 and
// the density is 2 F(skew y) f(y); K is always computed numerically so that
// an asymmetric base still yields a proper density.
class SkewParams {
 public:
  /// Computes K by quadrature. Throws ConvergenceError if that fails.
  SkewParams(GqldParams base, double skew);

  /// Symmetric base GqldParams::symmetric(alpha, q) with the given skew.
  static SkewParams standard(double alpha, double q, double skew);

  const GqldParams& base() const { return base_; }
  double skew() const { return skew_; }
  double norm_const() const { return norm_const_; }
  double log_norm_const() const { return log_norm_const_; }

  /// Whether the base is in the symmetric subfamily (delta = alpha,
  /// a(q-1) = 1, mu = 0, theta = 1), to 1e-12 relative.
  bool symmetric_base() const { return symmetric_; }

 private:
  GqldParams base_;
  double skew_;
  double norm_const_;
  double log_norm_const_;
  bool symmetric_;
};

double log_skew_pdf(const SkewParams& s, double y);
double skew_pdf(const SkewParams& s, double y);

/// Adaptive quadrature of skew_pdf over (-inf, t], absolute tolerance 1e-10.
/// Throws ConvergenceError when the quadrature does not converge.
double skew_cdf(const SkewParams& s, double t);

/// skew_cdf at every point of an ascending sequence, integrating only the
/// gaps between consecutive points.
std::vector<double> skew_cdf_sorted(const SkewParams& s, std::span<const double> ascending);

struct SkewSampleResult {
  SampleBatch batch;
  std::size_t proposals = 0;
  double acceptance_rate() const {
    return proposals == 0 ? 0.0
                          : static_cast<double>(batch.values.size()) /
                                static_cast<double>(proposals);
  }
};

/// Rejection sampling: propose y from the base law, accept with
/// probability F(skew * y). Acceptance rate is K (1/2 over a symmetric base).
SkewSampleResult skew_sample_with_stats(const SkewParams& s, std::size_t n, std::uint64_t seed);
SampleBatch skew_sample(const SkewParams& s, std::size_t n, std::uint64_t seed);

/// Second central differences of ln skew_pdf must stay <= 1e-9. The grid
/// must cover [-15, 15] with step <= 0.01.
ValidationReport check_log_concavity(const SkewParams& s, const GridSpec& grid);

/// Sup-norm distance on [0.1, 15] between the skew density and the folded
/// base 2 f(y) 1[y > 0].
double half_limit_distance(const GqldParams& base, double skew);

/// Distances for skew in {20, 100, 500} over s.base() must strictly
/// decrease. The statistic is the largest successive increase (negative
/// when strictly decreasing), threshold 0.
ValidationReport check_tail_limit(const SkewParams& s);

}  // namespace gqld

#endif  // GQLD_SKEW_H_
