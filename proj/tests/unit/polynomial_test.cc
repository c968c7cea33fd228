// Copyright 2026 The semicycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semicycle/polynomial.h"

#include <cmath>

#include <gtest/gtest.h>

namespace semicycle {
namespace {

TEST(PolynomialTest, EvaluatesAndDifferentiates) {
  const Polynomial p({1.0, -2.0, 3.0});
  EXPECT_DOUBLE_EQ(p(2.0), 9.0);
  EXPECT_DOUBLE_EQ(p.derivative()(2.0), 10.0);
  EXPECT_DOUBLE_EQ(p.antiderivative()(1.0), 1.0);
  EXPECT_EQ(p.degree(), 2);
}

TEST(PolynomialTest, ShiftAndScale) {
  const Polynomial p({0.5, 1.0, -1.0, 0.25});
  const Polynomial shifted = p.shifted(0.7);
  const Polynomial scaled = p.scaled_argument(2.0);
  for (double t : {-1.0, 0.0, 0.3, 2.0}) {
    EXPECT_NEAR(shifted(t), p(t + 0.7), 1e-14);
    EXPECT_NEAR(scaled(t), p(2.0 * t), 1e-14);
  }
}

TEST(PolynomialTest, Arithmetic) {
  const Polynomial a({1.0, 1.0});
  const Polynomial b({-1.0, 1.0});
  EXPECT_DOUBLE_EQ((a * b)(3.0), 8.0);
  EXPECT_DOUBLE_EQ((a + b)(3.0), 6.0);
  EXPECT_DOUBLE_EQ((a - b)(3.0), 2.0);
  EXPECT_DOUBLE_EQ((2.0 * a)(3.0), 8.0);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(PolynomialTest, RootsAndRange) {
  const Polynomial p({-2.0, 0.0, 1.0});  // t^2 - 2
  const auto roots = real_roots(p, -3.0, 3.0);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0], -std::sqrt(2.0), 1e-13);
  EXPECT_NEAR(roots[1], std::sqrt(2.0), 1e-13);
  const ValueRange r = value_range(p, -1.0, 3.0);
  EXPECT_DOUBLE_EQ(r.min, -2.0);
  EXPECT_DOUBLE_EQ(r.max, 7.0);
}

}  // namespace
}  // namespace semicycle
