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

#ifndef GQLD_KS_H_
#define GQLD_KS_H_

#include <functional>
#include <span>

#include "gqld/random.h"

namespace gqld {

struct KsResult {
  double statistic = 0.0;  // D_n, always in [0, 1]
  double p_value = 1.0;    // asymptotic Kolmogorov tail probability
};

/// P(K > lambda) for the Kolmogorov limit law, summed until terms fall
/// below 1e-10 (theta-function form for lambda < 1).
double kolmogorov_survival(double lambda);

/// lambda with kolmogorov_survival(lambda) = level (1.6276 for level 0.01).
double kolmogorov_critical(double level);

/// One-sample test: D_n = sup |F_n - F| against a continuous cdf, p-value
/// from sqrt(n) D_n.
KsResult ks_statistic(std::span<const double> values, const std::function<double(double)>& cdf);
KsResult ks_statistic(const SampleBatch& batch, const std::function<double(double)>& cdf);

/// One-sample test when the model CDF has already been evaluated at the
/// ascending sample points.
KsResult ks_from_sorted_cdf(std::span<const double> cdf_at_sorted);

/// Two-sample test, p-value from sqrt(n m / (n + m)) D.
KsResult ks_two_sample(std::span<const double> first, std::span<const double> second);

}  // namespace gqld

#endif  // GQLD_KS_H_
