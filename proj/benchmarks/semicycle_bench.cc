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

#include <benchmark/benchmark.h>

#include "semicycle/analysis.h"
#include "semicycle/repro.h"
#include "semicycle/spectral.h"
#include "semicycle/thresholds.h"

namespace semicycle {
namespace {

void BM_Theta(benchmark::State& state) {
  double d = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta(d));
    d = d > 1.4 ? 0.0 : d + 0.01;
  }
}
BENCHMARK(BM_Theta);

void BM_BetaIterate(benchmark::State& state) {
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(beta_iterate(1.0, 1.0, grid).psi);
}
BENCHMARK(BM_BetaIterate)->Arg(1024)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);

void BM_ShootingOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(psi_oracle_bvp(1.0, 1.0));
}
BENCHMARK(BM_ShootingOracle)->Unit(benchmark::kMillisecond);

void BM_IntegrateExample3(benchmark::State& state) {
  const ExampleSpec spec{Example::kExample3, 0.1, static_cast<int>(state.range(0))};
  const DelayProblem problem = build_example_problem(spec);
  const double horizon = example_horizon(spec);
  for (auto _ : state) benchmark::DoNotOptimize(integrate(problem, horizon, kDefaultStep).end());
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(horizon / kDefaultStep));
}
BENCHMARK(BM_IntegrateExample3)->Arg(5)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const ExampleSpec spec{Example::kExample3, 0.1, 48};
  const DelayProblem problem = build_example_problem(spec);
  const Trajectory traj = integrate(problem, example_horizon(spec), kDefaultStep);
  for (auto _ : state) benchmark::DoNotOptimize(classify(problem, traj).verdict);
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

void BM_LambertW(benchmark::State& state) {
  const int branch = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lambert_w(branch, Complex(0.0, 2.0)));
}
BENCHMARK(BM_LambertW)->Arg(0)->Arg(1)->Arg(10);

void BM_CharRoots(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(char_roots(4.0, 1, 0, 20).size());
}
BENCHMARK(BM_CharRoots);

}  // namespace
}  // namespace semicycle

BENCHMARK_MAIN();
