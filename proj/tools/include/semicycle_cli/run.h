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

#ifndef SEMICYCLE_CLI_RUN_H_
#define SEMICYCLE_CLI_RUN_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "semicycle/harness.h"
#include "semicycle/integrator.h"
#include "semicycle/thresholds.h"

namespace semicycle::cli {

enum class Subcommand { kThresholds, kTable, kSimulate, kClassify, kSpectrum, kRepro, kHarness };

enum ExitCode { kExitOk = 0, kExitDomain = 1, kExitParse = 2 };

struct RunConfig {
  Subcommand subcommand = Subcommand::kThresholds;
  std::optional<std::string> input_path;
  // Empty means standard output.
  std::string output_path;
  std::string svg_path;

  double step = kDefaultStep;
  // Zero selects the per-subcommand default.
  double horizon = 0.0;
  std::size_t grid = kDefaultGridSize;
  double tol = kDefaultIterationTol;
  std::uint64_t seed = kDefaultSeed;
  double rho = 1.0;
  // "lo:hi:step", a comma list, or a single value.
  std::string delta_range = "0:3:0.1";
  std::string rho_range = "1";
  int jobs = 1;
  bool use_cache = true;

  // spectrum
  double delay = 4.0;
  int sign = 1;
  std::string branches = "0..2";

  // repro, and classify on a built-in example
  std::string example;
  double epsilon = 0.0;
  int periods = 5;
  // classify: minimum peak growth across the window for unbounded_observed.
  double growth_factor = 1.5;
  double sample = 0.01;

  // harness: margins | comparison | wronskian | arches
  std::string kind = "margins";
  int instances = 200;
};

// Executes one subcommand. Primary output goes to config.output_path, or to
// `out` when that is empty; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it.
int run_command_line(int argc, const char* const* argv, std::ostream& out,
                     std::ostream& err);

}  // namespace semicycle::cli

#endif  // SEMICYCLE_CLI_RUN_H_
