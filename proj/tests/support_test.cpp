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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gqld/error.h"
#include "gqld/format.h"
#include "gqld/grid.h"
#include "gqld/ks.h"
#include "gqld/oracle.h"

namespace gqld {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Quadrature, FiniteInterval) {
  const auto r = oracle::integrate_interval([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
  EXPECT_THROW(oracle::integrate_interval([](double) { return 1.0; }, 1.0, 0.0, 1e-8),
               DomainError);
  EXPECT_THROW(oracle::integrate_interval([](double) { return 1.0; }, 0.0, 1.0, 0.0), DomainError);
}

TEST(Quadrature, WholeLine) {
  const auto normal = oracle::integrate_line(
      [](double y) { return std::exp(-0.5 * y * y) / std::sqrt(2.0 * kPi); }, 1e-12);
  EXPECT_TRUE(normal.converged);
  EXPECT_NEAR(normal.value, 1.0, 1e-10);
  const auto odd = oracle::integrate_line([](double y) { return y * std::exp(-y * y); }, 1e-12);
  EXPECT_NEAR(odd.value, 0.0, 1e-12);
  const auto zero = oracle::integrate_line([](double) { return 0.0; }, 1e-12);
  EXPECT_EQ(zero.value, 0.0);
  const auto sech = oracle::integrate_line([](double y) { return 1.0 / std::cosh(y); }, 1e-11,
                                           {.center = 0.0, .scale = 4.0});
  EXPECT_NEAR(sech.value, kPi, 1e-11);
}

TEST(Quadrature, HalfLineMaps) {
  const auto gamma3 =
      oracle::integrate_halfline([](double x) { return x * x * std::exp(-x); }, 1e-12);
  EXPECT_NEAR(gamma3.value, 2.0, 1e-11);
  const auto power = oracle::integrate_halfline(
      [](double x) { return 1.0 / (1.0 + x * x); }, 1e-11, 1.0, oracle::HalfLineMap::kAlgebraic);
  EXPECT_NEAR(power.value, kPi / 2.0, 1e-11);
}

TEST(Quadrature, ComplexIntegrand) {
  // integral of e^{ity} phi(y) dy = e^{-t^2/2}
  const double t = 1.3;
  const auto r = oracle::integrate_line_complex(
      [t](double y) {
        return std::exp(ComplexValue(-0.5 * y * y, t * y)) / std::sqrt(2.0 * kPi);
      },
      1e-12);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value.real(), std::exp(-0.5 * t * t), 1e-11);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-11);
}

TEST(Quadrature, ReportsNonConvergenceAtPanelCap) {
  const auto r = oracle::integrate_interval([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0,
                                            1e-14, 50);
  EXPECT_FALSE(r.converged);
}

TEST(Quadrature, RawMoments) {
  const auto normal = [](double y) { return std::exp(-0.5 * y * y) / std::sqrt(2.0 * kPi); };
  EXPECT_NEAR(oracle::moment(normal, 2, 1e-11).value, 1.0, 1e-10);
  EXPECT_NEAR(oracle::moment(normal, 4, 1e-11).value, 3.0, 1e-9);
  EXPECT_THROW(oracle::moment(normal, -1, 1e-8), DomainError);
}

TEST(GridChecks, ConvexityAndMonotonicity) {
  const auto square = [](double x) { return x * x; };
  EXPECT_TRUE(oracle::grid_convexity(square, -3.0, 3.0, 1000).passed);
  const auto bad = oracle::grid_convexity([](double x) { return -x * x; }, -3.0, 3.0, 1000);
  EXPECT_FALSE(bad.passed);
  EXPECT_GT(bad.statistic, 1e-9);
  EXPECT_TRUE(oracle::grid_monotone([](double x) { return std::tanh(x); }, -5.0, 5.0, 1000).passed);
  const auto dip = oracle::grid_monotone([](double x) { return std::sin(x); }, 0.0, 4.0, 400);
  EXPECT_FALSE(dip.passed);
  EXPECT_GT(dip.location, kPi / 2.0 - 0.05);
  EXPECT_THROW(oracle::grid_convexity(square, -1.0, 1.0, 50), DomainError);
}

// P(K > lambda) = 2 sum (-1)^(k-1) exp(-2 k^2 lambda^2)
double kolmogorov_series(double lambda) {
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k)
    sum += (k % 2 ? 2.0 : -2.0) * std::exp(-2.0 * k * k * lambda * lambda);
  return sum;
}

TEST(Kolmogorov, SurvivalAndCritical) {
  for (double lambda : {0.6, 0.9, 1.2, 1.6276, 2.5}) {
    EXPECT_NEAR(kolmogorov_survival(lambda), kolmogorov_series(lambda), 1e-10) << lambda;
  }
  EXPECT_NEAR(kolmogorov_survival(0.2), 1.0, 1e-10);
  EXPECT_NEAR(kolmogorov_critical(0.01), 1.62762, 1e-5);
  EXPECT_NEAR(kolmogorov_survival(kolmogorov_critical(0.05)), 0.05, 1e-10);
  EXPECT_THROW(kolmogorov_critical(1.0), DomainError);
}

TEST(KsStatistic, HandComputedCases) {
  const std::vector<double> values = {0.9, 0.1, 0.5};
  const auto ks = ks_statistic(values, [](double x) { return x; });
  EXPECT_NEAR(ks.statistic, 1.0 / 3.0 - 0.1, 1e-15);
  const std::vector<double> lo = {1, 2, 3};
  const std::vector<double> hi = {4, 5, 6};
  EXPECT_DOUBLE_EQ(ks_two_sample(lo, hi).statistic, 1.0);
  EXPECT_DOUBLE_EQ(ks_two_sample(lo, lo).statistic, 0.0);
  const std::vector<double> empty;
  EXPECT_THROW(ks_statistic(empty, [](double x) { return x; }), DomainError);
}

TEST(GridSpec, CountsAndValidation) {
  const GridSpec g(-10.0, 10.0, 0.02);
  EXPECT_EQ(g.size(), 1001u);
  EXPECT_DOUBLE_EQ(g[0], -10.0);
  EXPECT_NEAR(g[g.size() - 1], 10.0, 1e-12);
  EXPECT_EQ(GridSpec(0.0, 1.0, 0.3).size(), 4u);
  EXPECT_THROW(GridSpec(1.0, 0.0, 0.1), DomainError);
  EXPECT_THROW(GridSpec(0.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(GridSpec(0.0, 1.0, 1e-8), DomainError);
}

TEST(Format, SeventeenDigitsAndShortest) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(format_shortest(2.9), "2.9");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace gqld
