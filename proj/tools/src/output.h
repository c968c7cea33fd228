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

#ifndef SEMICYCLE_CLI_OUTPUT_H_
#define SEMICYCLE_CLI_OUTPUT_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace semicycle::cli {

// Writes to a sibling temporary file and renames it over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& text);

// Shortest representation that round-trips; "nan" and "inf" spelled out.
std::string num(double value);

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

// Line plot of one or more series as a standalone SVG document.
std::string svg_plot(const std::vector<Series>& series, const std::string& title);

// Calls fn(i) for i in [0, n) on `jobs` threads. Exceptions are rethrown on
// the calling thread, lowest index first.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace semicycle::cli

#endif  // SEMICYCLE_CLI_OUTPUT_H_
