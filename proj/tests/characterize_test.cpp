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

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "gqld/error.h"
#include "gqld/ks.h"

namespace gqld {
namespace {

GqldParams alpha_one() {
  return GqldParams({.alpha = 1.0, .beta = 3.0, .a = 1.0, .q = 2.0, .mu = 0.0, .theta = 1.0});
}

TEST(Transforms, ExponentialRoundTrip) {
  const auto p =
      GqldParams({.alpha = 1.0, .beta = 2.0, .a = 0.5, .q = 1.5, .mu = 1.0, .theta = 2.0});
  for (double x : {1e-9, 0.01, 0.7, 5.0, 40.0}) {
    const double y = exponential_to_gqld(p, x);
    EXPECT_NEAR(y, 1.0 + 2.0 * std::log(std::expm1(x) / 0.25), 1e-12 * std::abs(y) + 1e-12);
    EXPECT_NEAR(gqld_to_exponential(p, y) / x, 1.0, 1e-12);
  }
}

TEST(Transforms, StudentMapAndTarget) {
  const StudentTransform st{.m = 5, .a = 2.0, .q = 1.5, .mu = -1.0, .theta = 0.5};
  EXPECT_NEAR(student_to_gqld(st, 1.3), -1.0 + 0.5 * std::log(1.69 / (2.0 * 5 * 0.5)), 1e-14);
  EXPECT_DOUBLE_EQ(student_to_gqld(st, -1.3), student_to_gqld(st, 1.3));
  const auto target = st.target();
  EXPECT_DOUBLE_EQ(target.alpha(), 0.5);
  EXPECT_DOUBLE_EQ(target.beta(), 6.0 * 0.5 / 2.0);
  EXPECT_NEAR(target.delta(), 2.5, 1e-14);
  EXPECT_THROW((StudentTransform{.m = 0}.validate()), DomainError);
  EXPECT_THROW((StudentTransform{.m = 3, .q = 1.0}.validate()), DomainError);
}

TEST(ExponentialTransform, SamplesFitAlphaOneCdf) {
  const auto p = alpha_one();
  const auto batch = sample_exponential_transform(p, 20000, 3);
  EXPECT_EQ(batch.source, SampleSource::kExponentialTransform);
  EXPECT_EQ(sample_exponential_transform(p, 20000, 3).values, batch.values);
  EXPECT_GT(ks_statistic(batch, [&p](double y) { return cdf_alpha1(p, y); }).p_value, 1e-3);
  const auto two = GqldParams({.alpha = 2.0, .beta = 3.0, .q = 1.5});
  EXPECT_THROW(sample_exponential_transform(two, 10, 1), DomainError);
}

TEST(StudentTransformSampling, SamplesFitHalfAlphaCdf) {
  for (int m : {1, 4, 80}) {
    const StudentTransform st{.m = m, .a = 1.0, .q = 2.0};
    const auto target = st.target();
    const auto batch = sample_student_transform(st, 20000, 9);
    EXPECT_EQ(batch.source, SampleSource::kStudentTransform);
    EXPECT_GT(ks_statistic(batch, [&target](double y) { return cdf(target, y); }).p_value, 1e-3)
        << "m=" << m;
  }
}

TEST(CharFnIdentities, ExponentialSide) {
  const auto p =
      GqldParams({.alpha = 1.0, .beta = 1.7, .a = 2.0, .q = 1.6, .mu = 0.4, .theta = 1.3});
  for (double t : {-5.0, -0.5, 0.0, 1.0, 2.0}) {
    EXPECT_LT(std::abs(exponential_side_charfn(p, t) - char_fn(p, t)), 1e-8) << "t=" << t;
  }
  const std::array<double, 3> grid = {-1.0, 0.0, 1.0};
  EXPECT_TRUE(verify_exponential_charfn_identity(p, grid).passed);
  const std::array<double, 1> too_far = {11.0};
  EXPECT_THROW(verify_exponential_charfn_identity(p, too_far), DomainError);
}

TEST(CharFnIdentities, StudentSide) {
  const StudentTransform st{.m = 6, .a = 1.5, .q = 1.8, .mu = -0.3, .theta = 0.7};
  for (double t : {-2.0, -0.5, 0.0, 1.0, 2.0}) {
    const auto closed = student_closed_charfn(st, t);
    EXPECT_LT(std::abs(student_side_charfn(st, t) - closed), 1e-8) << "t=" << t;
    EXPECT_LT(std::abs(student_side_charfn(st, t, false) - closed), 1e-8) << "t=" << t;
    EXPECT_LT(std::abs(closed - char_fn(st.target(), t)), 1e-12) << "t=" << t;
  }
  EXPECT_THROW(student_closed_charfn(st, 5.0), DomainError);
}

}  // namespace
}  // namespace gqld
