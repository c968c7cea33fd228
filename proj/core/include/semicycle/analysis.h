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

#ifndef SEMICYCLE_ANALYSIS_H_
#define SEMICYCLE_ANALYSIS_H_

#include <functional>
#include <string>
#include <vector>

#include "semicycle/integrator.h"

namespace semicycle {

struct Zero {
  double t;
  // x and x' both vanish: a touch rather than a crossing.
  bool tangential;
};

// Zeros of the dense output on [start, end]. Crossings are located to
// machine precision on each step's cubic; touches are reported when |x|
// dips below tol at a stationary point.
std::vector<Zero> find_zeros(const Trajectory& traj, double tol = 1e-12);

struct Semicycle {
  double a;
  double b;
  double w;
  double peak;
  int sign;

  double length() const { return b - a; }
};

// One semicycle per adjacent pair of zeros, with w the first stationary
// point inside. Throws ResolutionError for zeros closer than 10 tol.
std::vector<Semicycle> semicycles(const Trajectory& traj,
                                  const std::vector<Zero>& zeros,
                                  double tol = 1e-9);

struct BoundCheck {
  bool applicable;
  bool satisfied;
  double margin;
};

inline constexpr double kMarginSlack = 1e-3;

// Descent from the extremum at w to the next zero, for a problem with
// |p| <= 1. Applicable when |x| <= peak on [w - tau_m, w].
BoundCheck check_descent(const Trajectory& traj, const Semicycle& sc,
                         double tau_m);

// max |x| over [a - delta - theta_delta, a] divided by the peak.
double ascent_rho(const Trajectory& traj, const Semicycle& sc, double delta);

// Ascent from the zero at a to the extremum at w, for a problem with
// |p| <= 1 and tau_m <= delta. Applicable when the equation holds on
// [a - theta_delta, w] and the data reach back to a - delta - theta_delta.
BoundCheck check_ascent(const Trajectory& traj, const Semicycle& sc,
                        double delta, double rho_hat);

enum class Verdict {
  kTendsToZeroCertified,
  kBoundedCertified,
  kUnboundedObserved,
  kNonoscillatoryObserved,
  kInconclusive,
};

std::string to_string(Verdict verdict);

struct Evidence {
  std::string name;
  double value;
  double threshold;
};

struct Classification {
  Verdict verdict;
  std::vector<Evidence> evidence;
  std::vector<Semicycle> semicycles;
  bool degenerate_zeros = false;
  // Time scale k of the normalizing rescale; lengths in evidence are in
  // normalized units (original length / k).
  double scale = 1.0;
};

struct ClassifyOptions {
  double margin = 1e-4;
  double equality_tol = 1e-6;
  double growth_factor = 1.5;
  // Maps a normalized tau_m to the semicycle threshold. Defaults to
  // semicycle_threshold; the CLI substitutes a cached table.
  std::function<double(double)> threshold;
  std::function<double()> gamma;
};

Classification classify(const DelayProblem& problem, const Trajectory& traj,
                        const ClassifyOptions& options = {});

struct MyshkisResult {
  bool applicable;
  bool holds;
  bool strict;
  double value;
};

// tau_m sqrt(sup p) against 2 sqrt(2); needs p >= 0 on [start, inf).
MyshkisResult criterion_myshkis(const DelayProblem& problem);

struct GustafsonResult {
  bool applicable;
  bool holds;
  double sup_value;
};

// sup over a grid on [start, horizon] of
// int_{t - tau(t)}^{t} (s - t + tau(t)) |p(s)| ds, against 1.
GustafsonResult criterion_gustafson(const DelayProblem& problem,
                                    double horizon);

struct WronskianCriterion {
  bool holds;
  double value;
};

// tau_m sqrt(esssup |p|) against 2 / e.
WronskianCriterion criterion_wronskian_2e(const DelayProblem& problem);

struct ComparisonResult {
  bool applicable;
  bool ok;
  double worst_violation;
  std::string reason;
};

// Integrates z (minorant) and y (majorant) and measures how far
// z(t)/z(s) >= y(t)/y(s) fails before the first zero of y.
ComparisonResult verify_comparison(const DelayProblem& minorant,
                                   const DelayProblem& majorant,
                                   double horizon, double step = kDefaultStep,
                                   double tol = 1e-6);

struct EnvelopeFit {
  double ratio;
  std::vector<double> window_peaks;
};

// Running peak over windows [zeta_n, zeta_{n+1}] between zeros with
// zeta_{n+1} > zeta_n + tau_m + k theta_{tau_m / k}, fitted by log-linear
// regression. tau_m is in the trajectory's units and k is the normalizing
// time scale (1 for a problem with esssup |p| = 1).
EnvelopeFit envelope_ratio(const Trajectory& traj,
                           const std::vector<Zero>& zeros, double tau_m,
                           double k = 1.0);

}  // namespace semicycle

#endif  // SEMICYCLE_ANALYSIS_H_
