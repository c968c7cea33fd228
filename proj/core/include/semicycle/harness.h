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

#ifndef SEMICYCLE_HARNESS_H_
#define SEMICYCLE_HARNESS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "semicycle/analysis.h"
#include "semicycle/repro.h"

namespace semicycle {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Independent generator for instance `index` of a run seeded with `seed`.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index);

// Piecewise-constant p with esssup |p| = 1 (mostly positive), piecewise
// constant delay up to a random bound, and a smooth random history whose
// value and slope at 0 continue into the initial data.
DelayProblem random_normalized_problem(std::mt19937_64& rng, double horizon);

struct MarginRecord {
  int semicycle;
  BoundCheck descent;
  BoundCheck ascent;
};

// Integrates the problem and checks descent and ascent on every semicycle.
std::vector<MarginRecord> margin_checks(const DelayProblem& problem,
                                        double horizon,
                                        double step = kDefaultStep);

struct ComparisonPair {
  DelayProblem minorant;
  DelayProblem majorant;
};

// z-problem with random p, tau and y-problem with P = |p| + noise,
// T = tau + noise; y has positive nonincreasing data and z's data are
// bounded by y's with matching value at 0.
ComparisonPair random_comparison_pair(std::mt19937_64& rng, double horizon);

// p <= 0 and tau_m sqrt(esssup |p|) <= 2 / e.
DelayProblem random_negative_problem(std::mt19937_64& rng, double horizon);

// Arch construction with block length in [1.5, 2.7] and peak ratio in
// [0.6, 0.92], long enough for `windows` envelope windows.
ArchConstruction random_arches(std::mt19937_64& rng, int windows = 3);

}  // namespace semicycle

#endif  // SEMICYCLE_HARNESS_H_
