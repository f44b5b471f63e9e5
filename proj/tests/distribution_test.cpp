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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gqld/error.h"
#include "gqld/ks.h"

namespace gqld {
namespace {

constexpr double kPi = std::numbers::pi;

GqldParams reference() {
  return GqldParams({.alpha = 1.0, .beta = 3.0, .a = 1.0, .q = 2.0, .mu = 0.0, .theta = 1.0});
}

GqldParams generic() {
  return GqldParams({.alpha = 2.5, .beta = 4.0, .a = 0.7, .q = 1.8, .mu = 1.0, .theta = 1.5});
}

// y = mu + theta ln x with x having density proportional to
// x^(alpha-1) (1 + a(q-1) x)^(-beta/(q-1)); b = a(q-1) x is beta-prime(alpha, delta).
double oracle_pdf(const GqldParams::Fields& f, double y) {
  const double k = f.a * (f.q - 1.0);
  const double shape2 = f.beta / (f.q - 1.0) - f.alpha;
  const double ln_b = std::log(k) + (y - f.mu) / f.theta;
  const double ln_beta_fn =
      std::lgamma(f.alpha) + std::lgamma(shape2) - std::lgamma(f.alpha + shape2);
  return std::exp(f.alpha * ln_b - (f.alpha + shape2) * std::log1p(std::exp(ln_b)) - ln_beta_fn) /
         f.theta;
}

template <typename F>
double simpson(F f, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) sum += f(lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

TEST(GqldParams, RejectsInvalidParameters) {
  using F = GqldParams::Fields;
  EXPECT_THROW(GqldParams(F{.alpha = 0.0}), DomainError);
  EXPECT_THROW(GqldParams(F{.beta = -1.0}), DomainError);
  EXPECT_THROW(GqldParams(F{.a = 0.0}), DomainError);
  EXPECT_THROW(GqldParams(F{.beta = 3.0, .q = 1.0}), DomainError);
  EXPECT_THROW(GqldParams(F{.theta = 0.0}), DomainError);
  // delta = 4 / 2 - 2 = 0
  EXPECT_THROW(GqldParams(F{.alpha = 2.0, .beta = 4.0, .q = 3.0}), DomainError);
}

TEST(GqldParams, DerivedQuantities) {
  const auto p = generic();
  EXPECT_DOUBLE_EQ(p.exponent(), 4.0 / 0.8);
  EXPECT_DOUBLE_EQ(p.delta(), 4.0 / 0.8 - 2.5);
  EXPECT_NEAR(p.log_scale(), std::log(0.7 * 0.8), 1e-15);
  const auto s = GqldParams::symmetric(1.5, 3.0);
  EXPECT_NEAR(s.delta(), 1.5, 1e-15);
  EXPECT_NEAR(s.log_scale(), 0.0, 1e-15);
}

TEST(ClosedFormSpots, ReferenceParameters) {
  const auto p = reference();
  EXPECT_NEAR(normalizing_constant(p), 2.0, 1e-12);
  EXPECT_NEAR(pdf(p, 0.0), 0.25, 1e-12);
  EXPECT_NEAR(cdf(p, 0.0), 0.75, 1e-12);
  EXPECT_NEAR(survival(p, 0.0), 0.25, 1e-12);
  EXPECT_NEAR(hazard(p, 0.0), 1.0, 1e-12);
  EXPECT_NEAR(cumulative_hazard(p, 0.0), 2.0 * std::log(2.0), 1e-12);
  EXPECT_NEAR(mean(p), -1.0, 1e-12);
  EXPECT_NEAR(variance(p), kPi * kPi / 3.0 - 1.0, 1e-12);
}

TEST(Pdf, MatchesOracleDensity) {
  for (const auto& p : {reference(), generic()}) {
    for (double y = -8.0; y <= 8.0; y += 0.37) {
      EXPECT_NEAR(pdf(p, y) / oracle_pdf(p.fields(), y), 1.0, 1e-12) << "y=" << y;
      EXPECT_NEAR(log_pdf(p, y), std::log(oracle_pdf(p.fields(), y)), 1e-12);
    }
  }
}

TEST(Cdf, MatchesSimpsonOfOracleDensity) {
  const auto p = generic();
  const auto f = [&](double y) { return oracle_pdf(p.fields(), y); };
  for (double t : {-3.0, 0.0, 1.0, 2.5, 6.0}) {
    EXPECT_NEAR(cdf(p, t), simpson(f, -80.0, t, 40000), 1e-10) << "t=" << t;
  }
}

TEST(Cdf, HypergeometricRouteAgrees) {
  const auto p = generic();
  for (double t = -6.0; t <= 6.0; t += 0.5) {
    EXPECT_NEAR(cdf_hyp2f1(p, t), cdf(p, t), 1e-11) << "t=" << t;
  }
}

TEST(Cdf, HypergeometricRouteInHeavyRightTail) {
  // delta = 0.34: the direct series would need ~1/(1 - s/(1+s)) terms.
  const double q = 3.8;
  const GqldParams p({.alpha = 5.3, .beta = (5.3 + 0.34) * (q - 1.0), .a = 1.0, .q = q});
  for (double prob : {0.9, 0.998, 0.999999}) {
    const double y = quantile(p, prob);
    EXPECT_NEAR(cdf_hyp2f1(p, y), prob, 1e-11) << "prob=" << prob;
  }
}

TEST(Cdf, LogCdfInDeepLeftTail) {
  const auto p = generic();
  // F ~ C' s^alpha / alpha as s -> 0, so ln F is linear in y with slope alpha/theta.
  const double l1 = log_cdf(p, -1500.0);
  const double l2 = log_cdf(p, -1501.5);
  EXPECT_TRUE(std::isfinite(l1));
  EXPECT_NEAR(l1 - l2, 2.5 * 1.5 / 1.5, 1e-9);
  EXPECT_NEAR(log_cdf(p, 0.3), std::log(cdf(p, 0.3)), 1e-14);
}

TEST(Survival, ComplementsCdfAndKeepsRightTail) {
  const auto p = generic();
  for (double t : {-4.0, 0.0, 3.0, 8.0}) EXPECT_NEAR(survival(p, t) + cdf(p, t), 1.0, 1e-14);
  EXPECT_GT(survival(p, 200.0), 0.0);
  EXPECT_LT(survival(p, 200.0), 1e-50);
}

TEST(AlphaOneForms, AgreeWithGeneralRoutes) {
  const auto p =
      GqldParams({.alpha = 1.0, .beta = 2.2, .a = 0.6, .q = 1.4, .mu = -0.5, .theta = 2.0});
  for (double y = -15.0; y <= 15.0; y += 0.25) {
    EXPECT_NEAR(cdf_alpha1(p, y), cdf(p, y), 1e-13);
    EXPECT_NEAR(survival_alpha1(p, y), survival(p, y), 1e-13);
  }
  EXPECT_THROW(cdf_alpha1(generic(), 0.0), DomainError);
  EXPECT_THROW(survival_alpha1(generic(), 0.0), DomainError);
}

TEST(Hazard, AlphaOneIncreasesToItsLimit) {
  const auto p = reference();
  // c = a(q-1) delta / theta = 2
  EXPECT_NEAR(hazard(p, 100.0), 2.0, 1e-12);
  double previous = 0.0;
  for (double t = -10.0; t <= 10.0; t += 0.01) {
    const double h = hazard(p, t);
    EXPECT_GT(h, previous);
    previous = h;
  }
}

TEST(Hazard, ThrowsWhenSurvivalUnderflows) {
  EXPECT_THROW(hazard(generic(), 1e4), RangeError);
  EXPECT_THROW(cumulative_hazard(generic(), 1e4), RangeError);
}

TEST(Quantile, InvertsCdfAcrossTails) {
  const auto p = generic();
  for (double prob : {1e-12, 1e-6, 0.01, 0.3, 0.5, 0.77, 0.999, 1.0 - 1e-9}) {
    const double y = quantile(p, prob);
    if (prob <= 0.5) {
      EXPECT_NEAR(cdf(p, y) / prob, 1.0, 1e-10) << "prob=" << prob;
    } else {
      EXPECT_NEAR(survival(p, y) / (1.0 - prob), 1.0, 1e-7) << "prob=" << prob;
    }
  }
  EXPECT_THROW(quantile(p, 0.0), DomainError);
  EXPECT_THROW(quantile(p, 1.0), DomainError);
}

TEST(Moments, MatchSimpsonIntegrals) {
  const auto p = generic();
  const auto f = [&](double y) { return oracle_pdf(p.fields(), y); };
  const double m1 = simpson([&](double y) { return y * f(y); }, -80.0, 80.0, 80000);
  const double m2 = simpson([&](double y) { return y * y * f(y); }, -80.0, 80.0, 80000);
  EXPECT_NEAR(mean(p), m1, 1e-9);
  EXPECT_NEAR(variance(p), m2 - m1 * m1, 1e-8);
}

TEST(CharFn, MatchesSimpsonAndIsOneAtZero) {
  const auto p = generic();
  const auto f = [&](double y) { return oracle_pdf(p.fields(), y); };
  const double t = 0.7;
  const double re = simpson([&](double y) { return std::cos(t * y) * f(y); }, -80.0, 80.0, 80000);
  const double im = simpson([&](double y) { return std::sin(t * y) * f(y); }, -80.0, 80.0, 80000);
  const auto phi = char_fn(p, t);
  EXPECT_NEAR(phi.real(), re, 1e-10);
  EXPECT_NEAR(phi.imag(), im, 1e-10);
  EXPECT_EQ(char_fn(p, 0.0), ComplexValue(1.0, 0.0));
  EXPECT_LE(std::abs(char_fn(p, -3.0)), 1.0 + 1e-12);
}

TEST(LimitQ1, MatchesGeneralizedExtremeValueDensity) {
  const ExtremeValueParams ev({.alpha = 2.0, .beta = 1.5, .a = 0.8, .mu = 0.5, .theta = 1.2});
  const auto oracle = [](double y) {
    const double z = (y - 0.5) / 1.2;
    const double rate = 0.8 * 1.5;
    return std::exp(2.0 * std::log(rate) + 2.0 * z - rate * std::exp(z) - std::lgamma(2.0)) / 1.2;
  };
  for (double y = -6.0; y <= 4.0; y += 0.5) EXPECT_NEAR(pdf_limit_q1(ev, y), oracle(y), 1e-14);
  const GqldParams near_one({.alpha = 2.0, .beta = 1.5, .a = 0.8, .q = 1.0 + 1e-7, .mu = 0.5,
                             .theta = 1.2});
  for (double y = -6.0; y <= 4.0; y += 0.5) EXPECT_NEAR(pdf(near_one, y), oracle(y), 1e-6);
}

TEST(Sample, DeterministicAndFitsCdf) {
  const auto p = generic();
  const auto a = sample(p, 20000, 11);
  const auto b = sample(p, 20000, 11);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.source, SampleSource::kInverseCdf);
  EXPECT_EQ(a.params_fingerprint, p.fingerprint());
  EXPECT_NE(sample(p, 20000, 12).values, a.values);
  EXPECT_GT(ks_statistic(a, [&p](double y) { return cdf(p, y); }).p_value, 1e-3);
  EXPECT_THROW(sample(p, 0, 1), DomainError);
}

TEST(DrawType2Beta, FitsCdf) {
  const auto p = generic();
  Rng rng(5);
  std::vector<double> draws(20000);
  for (auto& d : draws) d = draw_type2_beta(p, rng);
  EXPECT_GT(ks_statistic(draws, [&p](double y) { return cdf(p, y); }).p_value, 1e-3);
}

}  // namespace
}  // namespace gqld
