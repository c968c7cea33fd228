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

#include "semicycle/harness.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

namespace semicycle {
namespace {

TEST(HarnessTest, StreamsAreReproducibleAndDistinct) {
  std::mt19937_64 a = instance_rng(5, 3);
  std::mt19937_64 b = instance_rng(5, 3);
  std::mt19937_64 c = instance_rng(5, 4);
  std::mt19937_64 d = instance_rng(6, 3);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, d());
}

TEST(HarnessTest, NormalizedProblems) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    std::mt19937_64 rng = instance_rng(kDefaultSeed, i);
    const DelayProblem p = random_normalized_problem(rng, 30.0);
    EXPECT_DOUBLE_EQ(esssup_abs(p.p, {0.0, 30.0}), 1.0);
    EXPECT_GE(p.tau.range({0.0, 30.0}).min, 0.0);
    EXPECT_NEAR(p.history.left_limit(0.0), p.initial_value, 1e-12);
  }
}

TEST(HarnessTest, NegativeProblemsSatisfyTwoOverE) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    std::mt19937_64 rng = instance_rng(kDefaultSeed, i);
    const DelayProblem p = random_negative_problem(rng, 50.0);
    EXPECT_LE(p.p.range({0.0, 50.0}).max, 0.0);
    const double value =
        tau_max(p, 50.0) * std::sqrt(esssup_abs(p.p, {0.0, 50.0}));
    EXPECT_LE(value, 2.0 / std::numbers::e + 1e-12);
  }
}

TEST(HarnessTest, ComparisonPairsDominate) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    std::mt19937_64 rng = instance_rng(kDefaultSeed, i);
    const ComparisonPair pair = random_comparison_pair(rng, 10.0);
    for (double t = 0.0; t < 10.0; t += 0.05) {
      EXPECT_GE(pair.majorant.p(t), std::abs(pair.minorant.p(t)));
      EXPECT_GE(pair.majorant.tau(t), pair.minorant.tau(t));
    }
    const double hs = *pair.majorant.history_start;
    for (double t = hs; t < 0.0; t += 0.01) {
      EXPECT_LE(std::abs(pair.minorant.history(t) / pair.minorant.initial_value),
                pair.majorant.history(t) + 1e-12);
    }
  }
}

TEST(HarnessTest, ArchesAreNormalizableAndLongEnough) {
  for (std::uint64_t i = 0; i < 10; ++i) {
    std::mt19937_64 rng = instance_rng(kDefaultSeed, i);
    const ArchConstruction a = random_arches(rng);
    EXPECT_GE(a.block(), 1.5);
    EXPECT_LE(a.block(), 2.7);
    EXPECT_GE(a.blocks, 5);
  }
}

}  // namespace
}  // namespace semicycle
