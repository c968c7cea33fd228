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

#include "problem_json.h"

#include <fstream>
#include <iterator>
#include <sstream>

#include "semicycle/errors.h"

namespace semicycle::cli {
namespace {

using nlohmann::json;

double number_at(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw ParseError(path, "missing key '" + key + "'");
  if (!j.at(key).is_number()) {
    throw ParseError(path + "." + key, "expected a number");
  }
  return j.at(key).get<double>();
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

PiecewiseSignal signal_from_json(const json& j, const std::string& path) {
  if (j.is_number()) return PiecewiseSignal::constant(j.get<double>());
  if (!j.is_object()) throw ParseError(path, "expected a signal object or number");
  if (!j.contains("breakpoints") || !j.at("breakpoints").is_array()) {
    throw ParseError(path, "missing array 'breakpoints'");
  }
  if (!j.contains("segments") || !j.at("segments").is_array()) {
    throw ParseError(path, "missing array 'segments'");
  }
  std::vector<double> breakpoints;
  for (const json& b : j.at("breakpoints")) {
    if (!b.is_number()) throw ParseError(path + ".breakpoints", "expected numbers");
    breakpoints.push_back(b.get<double>());
  }
  std::vector<Polynomial> segments;
  for (const json& s : j.at("segments")) {
    if (s.is_number()) {
      segments.push_back(Polynomial::constant(s.get<double>()));
      continue;
    }
    if (!s.is_array() || s.empty()) {
      throw ParseError(path + ".segments", "expected coefficient arrays");
    }
    std::vector<double> c;
    for (const json& v : s) {
      if (!v.is_number()) throw ParseError(path + ".segments", "expected numbers");
      c.push_back(v.get<double>());
    }
    segments.emplace_back(std::move(c));
  }
  const double left = number_at(j, "left", path);
  const double right = number_at(j, "right", path);
  try {
    return PiecewiseSignal(std::move(breakpoints), std::move(segments), left, right);
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
}

json signal_to_json(const PiecewiseSignal& signal) {
  json segments = json::array();
  for (const Polynomial& poly : signal.segments()) {
    const auto c = poly.coefficients();
    segments.push_back(std::vector<double>(c.begin(), c.end()));
  }
  const auto bp = signal.breakpoints();
  return {{"breakpoints", std::vector<double>(bp.begin(), bp.end())},
          {"segments", segments},
          {"left", signal.left_extension()},
          {"right", signal.right_extension()}};
}

DelayProblem problem_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("$", "expected an object");
  for (const char* key : {"p", "tau"}) {
    if (!j.contains(key)) throw ParseError("$", std::string("missing key '") + key + "'");
  }
  DelayProblem problem{signal_from_json(j.at("p"), "$.p"),
                       signal_from_json(j.at("tau"), "$.tau"),
                       0.0,
                       PiecewiseSignal::constant(0.0),
                       0.0,
                       0.0,
                       std::nullopt};
  if (j.contains("start")) problem.start = number_at(j, "start", "$");
  if (j.contains("history")) problem.history = signal_from_json(j.at("history"), "$.history");
  if (j.contains("initial_value")) problem.initial_value = number_at(j, "initial_value", "$");
  if (j.contains("initial_slope")) problem.initial_slope = number_at(j, "initial_slope", "$");
  if (j.contains("history_start")) problem.history_start = number_at(j, "history_start", "$");
  return problem;
}

json problem_to_json(const DelayProblem& problem) {
  json j = {{"p", signal_to_json(problem.p)},
            {"tau", signal_to_json(problem.tau)},
            {"start", problem.start},
            {"history", signal_to_json(problem.history)},
            {"initial_value", problem.initial_value},
            {"initial_slope", problem.initial_slope}};
  if (problem.history_start) j["history_start"] = *problem.history_start;
  return j;
}

DelayProblem read_problem(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file, "cannot open");
  const std::string text{std::istreambuf_iterator<char>(in), {}};
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is 1-based and points one past the offending character.
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = line_column(text, offset);
    std::ostringstream where;
    where << file << ":" << line << ":" << col;
    std::string message = e.what();
    if (const auto pos = message.find("syntax error"); pos != std::string::npos) {
      message = message.substr(pos);
    }
    throw ParseError(where.str(), message);
  }
  try {
    return problem_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(file, e.what());
  }
}

}  // namespace semicycle::cli
