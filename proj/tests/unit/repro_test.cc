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

#include "semicycle/repro.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "semicycle/analysis.h"
#include "semicycle/errors.h"

namespace semicycle {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::numbers::sqrt2;

double max_error(const ExampleSpec& spec) {
  const DelayProblem problem = build_example_problem(spec);
  const double horizon = example_horizon(spec);
  const Trajectory traj = integrate(problem, horizon, kDefaultStep);
  double worst = 0.0;
  for (int i = 0; i <= 20000; ++i) {
    const double t = horizon * i / 20000.0;
    worst = std::max(worst, std::abs(traj.x(t) - closed_form(spec, t)));
  }
  return worst;
}

TEST(ClosedFormTest, SpecialPoints) {
  EXPECT_NEAR(example2_closed_form(0.0, kPi / 2), 1.0, 1e-15);
  EXPECT_NEAR(example3_closed_form(0.0, kSqrt2), 1.0, 1e-15);
  EXPECT_NEAR(example2_period(0.0), kPi, 1e-15);
  EXPECT_NEAR(example3_period(0.1), 2 * kSqrt2 + 0.2, 1e-15);
  EXPECT_GE(example2_period(0.3), kPi);
}

TEST(ClosedFormTest, EnvelopeFactors) {
  for (double eps : {0.0, 0.1}) {
    const double a = example2_period(eps);
    const double growth = std::hypot(std::sinh(eps), std::cosh(eps));
    const double t = a / 2;
    EXPECT_NEAR(example2_closed_form(eps, t + a) / example2_closed_form(eps, t), -growth,
                1e-12);
    const double b = example3_period(eps);
    EXPECT_NEAR(example3_closed_form(eps, kSqrt2 + b) / example3_closed_form(eps, kSqrt2),
                -(1 + eps * eps), 1e-12);
  }
}

TEST(ClosedFormProperty, SmoothAtJunctions) {
  for (Example which : {Example::kExample2, Example::kExample3}) {
    for (double eps : {0.0, 0.05, 0.2}) {
      const ExampleSpec spec{which, eps, 4};
      for (double t : closed_form_junctions(spec)) {
        if (t <= 0.0) continue;
        const double h = 1e-9;
        EXPECT_NEAR(closed_form(spec, t - h), closed_form(spec, t + h), 1e-8) << t;
        EXPECT_NEAR(closed_form_slope(spec, t - h), closed_form_slope(spec, t + h), 1e-8)
            << t;
        EXPECT_NEAR(closed_form_slope(spec, t),
                    (closed_form(spec, t + 1e-6) - closed_form(spec, t - 1e-6)) / 2e-6, 1e-6);
      }
    }
  }
}

TEST(OracleAgreement, Examples) {
  for (double eps : {0.0, 0.05, 0.2}) {
    EXPECT_LT(max_error({Example::kExample2, eps, 5}), 1e-6) << eps;
    EXPECT_LT(max_error({Example::kExample3, eps, 5}), 1e-6) << eps;
  }
  EXPECT_LT(max_error({Example::kSinPi, 0.0, 6}), 1e-6);
}

TEST(BuildTest, ProblemEncodings) {
  const DelayProblem e2 = build_example_problem({Example::kExample2, 0.0, 3});
  for (double t : {0.0, 1.0, 5.0}) EXPECT_EQ(e2.p(t), 1.0);
  EXPECT_EQ(e2.initial_value, 0.0);
  EXPECT_EQ(e2.initial_slope, 1.0);

  const DelayProblem e2b = build_example_problem({Example::kExample2, 0.1, 3});
  EXPECT_EQ(e2b.p(0.05), -1.0);
  EXPECT_EQ(e2b.p(0.1), 1.0);

  const DelayProblem e3 = build_example_problem({Example::kExample3, 0.0, 3});
  EXPECT_NEAR(e3.tau(0.0), kSqrt2, 1e-15);
  EXPECT_NEAR(e3.history(-kSqrt2), -1.0, 1e-15);
  EXPECT_EQ(e3.initial_value, 0.0);
  EXPECT_NEAR(e3.initial_slope, kSqrt2, 1e-15);
  for (double t = 0.0; t < 3 * example3_period(0.0); t += 0.01) ASSERT_GE(e3.tau(t), 0.0);

  const DelayProblem sine = build_example_problem({Example::kSinPi, 0.0, 3});
  EXPECT_EQ(sine.p(1.0), -1.0);
  EXPECT_EQ(sine.tau(1.0), kPi);
  for (double t : {-3.0, -2.0, -0.5}) EXPECT_NEAR(sine.history(t), std::sin(t), 1e-12);
}

TEST(BuildTest, ParseNames) {
  EXPECT_EQ(parse_example("example2"), Example::kExample2);
  EXPECT_EQ(parse_example("example3"), Example::kExample3);
  EXPECT_EQ(parse_example("sin"), Example::kSinPi);
  EXPECT_EQ(parse_example("sin_pi"), Example::kSinPi);
  EXPECT_THROW(parse_example("example4"), DomainError);
}

TEST(ArchesTest, Construction) {
  const ArchConstruction a = build_contracting_arches(0.9, 1.1, 12);
  EXPECT_NEAR(a.ratio, 0.9 / 1.1, 1e-15);
  EXPECT_LE(std::max(std::abs(a.p_rise), std::abs(a.p_fall)), 1.0);
  EXPECT_DOUBLE_EQ(a.horizon(), 24.0);
  const Trajectory traj = integrate(a.problem, a.horizon(), kDefaultStep);
  double worst = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double t = a.horizon() * i / 4000.0;
    worst = std::max(worst, std::abs(traj.x(t) - a.closed_form(t)));
  }
  EXPECT_LT(worst, 1e-8);
  for (const Semicycle& s : semicycles(traj, find_zeros(traj))) {
    EXPECT_NEAR(s.length(), 2.0, 1e-6);
  }
  EXPECT_THROW(build_contracting_arches(1.0, 0.0, 3), DomainError);
}

}  // namespace
}  // namespace semicycle
