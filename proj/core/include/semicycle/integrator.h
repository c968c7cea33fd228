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

#ifndef SEMICYCLE_INTEGRATOR_H_
#define SEMICYCLE_INTEGRATOR_H_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "semicycle/polynomial.h"
#include "semicycle/signals.h"

namespace semicycle {

// x''(t) + p(t) x(t - tau(t)) = 0 on [start, inf) with x = history on
// [history_start, start) and x(start) = initial_value, x'(start) =
// initial_slope. The value at start may jump away from the history.
struct DelayProblem {
  PiecewiseSignal p;
  PiecewiseSignal tau;
  double start = 0.0;
  PiecewiseSignal history = PiecewiseSignal::constant(0.0);
  double initial_value = 0.0;
  double initial_slope = 0.0;
  // Left end of the initial data. Unset means start - tau_m, where tau_m is
  // taken over the integration horizon.
  std::optional<double> history_start;
};

// Largest delay over [problem.start, horizon].
double tau_max(const DelayProblem& problem, double horizon);

// x~(t) = x(k t): coefficient k^2 p(k t), delay tau(k t) / k.
DelayProblem rescale(const DelayProblem& problem, double k);

// rescale with k = 1 / sqrt(esssup |p|) over `window`. Returns the problem
// and the k used.
std::pair<DelayProblem, double> normalized(const DelayProblem& problem,
                                           Interval window);

// One accepted step. Accelerations are one-sided: a0 is the right limit at
// t0, a1 the left limit at t1.
struct StepRecord {
  double t0;
  double t1;
  double x0;
  double x1;
  double v0;
  double v1;
  double a0;
  double a1;
};

struct TrajectoryNode {
  double t;
  double x;
  double dx;
};

struct TrajectoryEvent {
  enum class Kind { kZero, kExtremum };
  Kind kind;
  double t;
  double x;
};

class Trajectory {
 public:
  Trajectory(double start, double history_start, PiecewiseSignal history,
             std::vector<StepRecord> steps);

  double start() const { return start_; }
  double end() const { return steps_.empty() ? start_ : steps_.back().t1; }
  double history_start() const { return history_start_; }
  const PiecewiseSignal& history() const { return history_; }

  // Dense output; the history is used below start.
  double x(double t) const;
  double dx(double t) const;

  std::span<const StepRecord> steps() const { return steps_; }
  std::vector<TrajectoryNode> nodes() const;
  std::span<const TrajectoryEvent> events() const { return events_; }

  // Index of the step containing t (start <= t <= end).
  std::size_t step_index(double t) const;
  // Cubic Hermite interpolants of step i in u = t - t0.
  Polynomial position(std::size_t i) const;
  Polynomial velocity(std::size_t i) const;

  // Exact maximum of |x| over [lo, hi] intersected with the known domain.
  double max_abs(double lo, double hi) const;

 private:
  void require_in_domain(double t) const;

  double start_;
  double history_start_;
  PiecewiseSignal history_;
  std::vector<StepRecord> steps_;
  std::vector<TrajectoryEvent> events_;
};

Trajectory integrate(const DelayProblem& problem, double horizon, double step);

inline constexpr double kDefaultStep = 1e-3;

// z: zero history, z(s) = 1, z'(s) = 0. y: zero history, y(s) = 0,
// y'(s) = 1.
std::pair<Trajectory, Trajectory> fundamental_system(
    const PiecewiseSignal& p, const PiecewiseSignal& tau, double s,
    double horizon, double step = kDefaultStep);

// z(t) y'(t) - z'(t) y(t).
double wronskian(const Trajectory& z, const Trajectory& y, double t);

struct WronskianSample {
  double t;
  int sign;
  double log_abs;
};

// Wronskian of the fundamental system at every node, computed from a basis
// that is re-orthonormalized as it grows. Unlike `wronskian` this stays
// accurate when z and y grow exponentially.
std::vector<WronskianSample> wronskian_profile(const PiecewiseSignal& p,
                                               const PiecewiseSignal& tau,
                                               double s, double horizon,
                                               double step = kDefaultStep);

}  // namespace semicycle

#endif  // SEMICYCLE_INTEGRATOR_H_
