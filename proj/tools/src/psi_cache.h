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

#ifndef SEMICYCLE_CLI_PSI_CACHE_H_
#define SEMICYCLE_CLI_PSI_CACHE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <tuple>

namespace semicycle::cli {

// Directory for persisted tables: $SEMICYCLE_CACHE_DIR, else
// $XDG_CACHE_HOME/semicycle, else ~/.cache/semicycle.
std::filesystem::path cache_dir();

// Psi(rho, delta) values keyed by the exact inputs and the iteration
// parameters. Values are stored with 17 significant digits so a reload
// reproduces the computed doubles bit for bit.
class PsiCache {
 public:
  PsiCache(std::filesystem::path file, std::size_t grid, double tol);

  // Cache file for the given parameters under cache_dir().
  static std::filesystem::path path_for(std::size_t grid, double tol);

  double get(double rho, double delta);
  bool contains(double rho, double delta) const;
  void put(double rho, double delta, double value);
  std::size_t grid() const { return grid_; }
  double tol() const { return tol_; }

  // Writes new entries back; a no-op if nothing was added. Failures to write
  // are reported on stderr and otherwise ignored.
  void flush();

 private:
  std::filesystem::path file_;
  std::size_t grid_;
  double tol_;
  std::map<std::pair<double, double>, double> values_;
  bool dirty_ = false;
  mutable std::mutex mu_;
};

}  // namespace semicycle::cli

#endif  // SEMICYCLE_CLI_PSI_CACHE_H_
