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

#include "psi_cache.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/format.h>

#include "output.h"
#include "semicycle/thresholds.h"

namespace semicycle::cli {

std::filesystem::path cache_dir() {
  if (const char* dir = std::getenv("SEMICYCLE_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "semicycle";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "semicycle";
  }
  return std::filesystem::temp_directory_path() / "semicycle";
}

PsiCache::PsiCache(std::filesystem::path file, std::size_t grid, double tol)
    : file_(std::move(file)), grid_(grid), tol_(tol) {
  std::ifstream in(file_);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') ||
        !std::getline(row, c)) {
      continue;
    }
    try {
      values_[{std::stod(a), std::stod(b)}] = std::stod(c);
    } catch (const std::exception&) {
      // Skip damaged rows; they will be recomputed.
    }
  }
}

std::filesystem::path PsiCache::path_for(std::size_t grid, double tol) {
  return cache_dir() / fmt::format("psi_grid{}_tol{:.3g}.csv", grid, tol);
}

bool PsiCache::contains(double rho, double delta) const {
  std::lock_guard lock(mu_);
  return values_.count({rho, delta}) > 0;
}

void PsiCache::put(double rho, double delta, double value) {
  std::lock_guard lock(mu_);
  auto [it, inserted] = values_.emplace(std::make_pair(rho, delta), value);
  if (inserted) dirty_ = true;
}

double PsiCache::get(double rho, double delta) {
  {
    std::lock_guard lock(mu_);
    if (auto it = values_.find({rho, delta}); it != values_.end()) return it->second;
  }
  const double value = beta_iterate(rho, delta, grid_, tol_).psi;
  put(rho, delta, value);
  return value;
}

void PsiCache::flush() {
  std::lock_guard lock(mu_);
  if (!dirty_) return;
  std::string text = "rho,delta,psi\n";
  for (const auto& [key, value] : values_) {
    text += fmt::format("{:.17g},{:.17g},{:.17g}\n", key.first, key.second, value);
  }
  try {
    std::filesystem::create_directories(file_.parent_path());
    write_atomically(file_, text);
    dirty_ = false;
  } catch (const std::exception& e) {
    std::cerr << "warning: could not write cache " << file_ << ": " << e.what() << "\n";
  }
}

}  // namespace semicycle::cli
