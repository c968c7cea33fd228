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

#ifndef SEMICYCLE_THRESHOLDS_H_
#define SEMICYCLE_THRESHOLDS_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "semicycle/signals.h"

namespace semicycle {

// r_delta(t): 1 for t <= 0, the alternating partial sum on [(n-1)delta,
// n delta] otherwise, cos(t) when delta == 0.
double eval_r(double delta, double t);

// First positive zero of r_delta, in [sqrt(2), pi/2].
double theta(double delta);

// rho * r_delta(theta_delta - w - delta) on [-delta, 0], zero elsewhere.
double forcing_term(double rho, double delta, double w);

// Caches theta_delta so repeated evaluations of r_delta and of the forcing
// term stay cheap.
class ComparisonSolution {
 public:
  explicit ComparisonSolution(double delta);

  double delta() const { return delta_; }
  double first_zero() const { return theta_; }
  double operator()(double t) const { return eval_r(delta_, t); }
  double forcing(double rho, double w) const;

 private:
  double delta_;
  double theta_;
};

struct ThresholdResult {
  double psi;
  int iterations;
  std::vector<double> omega_sequence;
  GridFunction limit_profile;
};

// Called once per completed step with the step index, the new omega and the
// beta samples the step produced (on the fixed grid over [-pi/2, 0]).
using BetaObserver =
    std::function<void(int step, double omega, std::span<const double> beta)>;

inline constexpr std::size_t kDefaultGridSize = 4096;
inline constexpr double kDefaultIterationTol = 1e-10;
inline constexpr int kDefaultMaxIterations = 500;

ThresholdResult beta_iterate(double rho, double delta,
                             std::size_t grid_size = kDefaultGridSize,
                             double tol = kDefaultIterationTol,
                             int max_iter = kDefaultMaxIterations,
                             const BetaObserver& observer = nullptr);

double psi(double rho, double delta);

inline constexpr std::size_t kDefaultOracleMesh = 20000;

// Shooting solution of the limit boundary value problem; independent of
// beta_iterate.
double psi_oracle_bvp(double rho, double delta,
                      std::size_t mesh = kDefaultOracleMesh);

// Fixed point psi(1, g) = g on [sqrt(2), pi/2].
double gamma_constant(double tol = 1e-9);

// psi(1, tau_m) + theta(tau_m).
double semicycle_threshold(double tau_m);

}  // namespace semicycle

#endif  // SEMICYCLE_THRESHOLDS_H_
