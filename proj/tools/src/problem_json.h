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

#ifndef SEMICYCLE_CLI_PROBLEM_JSON_H_
#define SEMICYCLE_CLI_PROBLEM_JSON_H_

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "semicycle/integrator.h"

namespace semicycle::cli {

// Malformed or schema-violating input. `where` is "file:line:col" when the
// position is known, otherwise the file name or JSON path.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& message)
      : std::runtime_error(where + ": " + message) {}
};

// A signal is {"breakpoints": [...], "segments": [[c0, c1, ...], ...],
// "left": v, "right": v}. Segment coefficients are in local coordinates,
// i.e. segment i is sum c_j (t - breakpoints[i])^j. A bare number is a
// constant signal.
PiecewiseSignal signal_from_json(const nlohmann::json& j,
                                 const std::string& path);
nlohmann::json signal_to_json(const PiecewiseSignal& signal);

// {"p": signal, "tau": signal, "start": s, "history": signal,
//  "initial_value": x, "initial_slope": v, "history_start": h}
// Everything but p and tau is optional.
DelayProblem problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const DelayProblem& problem);

DelayProblem read_problem(const std::string& file);

}  // namespace semicycle::cli

#endif  // SEMICYCLE_CLI_PROBLEM_JSON_H_
