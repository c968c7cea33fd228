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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "semicycle/analysis.h"
#include "semicycle/harness.h"
#include "semicycle/repro.h"
#include "semicycle/spectral.h"
#include "semicycle/thresholds.h"

namespace {

using namespace semicycle;

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::numbers::sqrt2;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> check;
};

double max_closed_form_error(const ExampleSpec& spec, const Trajectory& traj) {
  const double horizon = example_horizon(spec);
  double worst = 0.0;
  for (int i = 0; i <= 40000; ++i) {
    const double t = horizon * i / 40000.0;
    worst = std::max(worst, std::abs(traj.x(t) - closed_form(spec, t)));
  }
  return worst;
}

// Worst deviation of consecutive semicycle peak ratios from `factor`.
double peak_ratio_deviation(const std::vector<Semicycle>& scs, double factor) {
  double worst = 0.0;
  for (std::size_t i = 1; i < scs.size(); ++i) {
    worst = std::max(worst, std::abs(scs[i].peak / scs[i - 1].peak - factor));
  }
  return worst;
}

double length_deviation(const std::vector<Semicycle>& scs, double length) {
  double worst = 0.0;
  for (const Semicycle& s : scs) worst = std::max(worst, std::abs(s.length() - length));
  return worst;
}

Outcome theta_values() {
  double worst = std::abs(theta(0.0) - kPi / 2);
  bool pass = worst <= 1e-6;
  double tail = 0.0;
  for (double d : {1.5, 2.0, 5.0}) tail = std::max(tail, std::abs(theta(d) - kSqrt2));
  pass = pass && tail <= 1e-9;
  return {pass, fmt::format("|theta(0)-pi/2|={:.2e} max|theta-sqrt2|={:.2e}", worst, tail)};
}

Outcome psi_values() {
  double at_zero = 0.0;
  for (double rho : {0.5, 1.0, 2.0}) at_zero = std::max(at_zero, std::abs(psi(rho, 0.0) - kPi / 2));
  double tail = 0.0;
  for (double d : {2 * kSqrt2, 3.0, 4.0}) tail = std::max(tail, std::abs(psi(1.0, d) - kSqrt2));
  return {at_zero <= 2e-3 && tail <= 2e-3,
          fmt::format("max|psi(rho,0)-pi/2|={:.2e} max|psi(1,d)-sqrt2|={:.2e}", at_zero, tail)};
}

Outcome oracle_agreement() {
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const double rho = 0.5 + 1.5 * i / 4.0;
      const double delta = 3.0 * j / 4.0;
      worst = std::max(worst, std::abs(beta_iterate(rho, delta).psi - psi_oracle_bvp(rho, delta)));
    }
  }
  return {worst < 1e-4, fmt::format("max|iteration-shooting|={:.2e} on 5x5 grid", worst)};
}

Outcome gamma_bracket() {
  const double g = gamma_constant();
  const double residual = std::abs(psi(1.0, g) - g);
  return {g >= kSqrt2 && g <= kPi / 2 && residual < 1e-5,
          fmt::format("gamma={:.10f} residual={:.2e}", g, residual)};
}

Outcome spectrum_table() {
  struct Row {
    double re, im, semicycle;
  };
  const Row table[] = {{0.34, 0.37, 8.45},
                       {-0.57, 3.05, 1.03},
                       {-0.21, 1.50, 2.09},
                       {-0.92, 6.21, 0.51},
                       {-0.77, 4.63, 0.68}};
  const auto roots = char_roots(4.0, 1, 0, 2);
  int matched = 0;
  bool ok = roots.size() == 5;
  for (const Row& row : table) {
    for (const CharRoot& r : roots) {
      if (std::abs(std::abs(r.lambda.imag()) - row.im) > 0.005 + 1e-12) continue;
      const double sc = eigen_semicycle(r);
      const bool digits = std::abs(r.lambda.real() - row.re) <= 0.005 + 1e-12 &&
                          std::abs(sc - row.semicycle) <= 0.005 + 1e-12;
      const bool sign_rule = (r.lambda.real() > 0) == (sc > 2 * kSqrt2);
      if (digits && sign_rule && r.residual < 1e-10) ++matched;
    }
  }
  ok = ok && matched == 5;
  return {ok, fmt::format("{}/5 roots match to 2 decimals with residual < 1e-10", matched)};
}

Outcome example_two() {
  bool pass = true;
  std::string detail;
  for (double eps : {0.0, 0.1}) {
    const ExampleSpec spec{Example::kExample2, eps, 5};
    const Trajectory traj = integrate(build_example_problem(spec), example_horizon(spec), kDefaultStep);
    const double err = max_closed_form_error(spec, traj);
    const auto scs = semicycles(traj, find_zeros(traj));
    const double len = length_deviation(scs, example2_period(eps));
    const double factor = std::hypot(std::sinh(eps), std::cosh(eps));
    const double ratio = peak_ratio_deviation(scs, factor);
    pass = pass && err < 1e-6 && len <= 1e-6 && ratio <= 1e-6 && scs.size() >= 4;
    detail += fmt::format("eps={}: err={:.1e} len_dev={:.1e} ratio_dev={:.1e}; ", eps, err, len, ratio);
  }
  return {pass, detail};
}

Outcome example_three() {
  bool pass = true;
  std::string detail;
  for (double eps : {0.0, 0.1}) {
    const ExampleSpec spec{Example::kExample3, eps, 5};
    const Trajectory traj = integrate(build_example_problem(spec), example_horizon(spec), kDefaultStep);
    const double err = max_closed_form_error(spec, traj);
    const auto scs = semicycles(traj, find_zeros(traj));
    const double len = length_deviation(scs, 2 * kSqrt2 + 2 * eps);
    const double ratio = peak_ratio_deviation(scs, 1 + eps * eps);
    pass = pass && err < 1e-6 && len <= 1e-6 && ratio <= 1e-6 && scs.size() >= 4;
    detail += fmt::format("eps={}: err={:.1e} len_dev={:.1e} ratio_dev={:.1e}; ", eps, err, len, ratio);
  }
  // The 1.5x growth rule needs (1 + eps^2)^n >= 1.5 inside the window.
  const ExampleSpec growing{Example::kExample3, 0.1, 48};
  const DelayProblem problem = build_example_problem(growing);
  const Classification c =
      classify(problem, integrate(problem, example_horizon(growing), kDefaultStep));
  pass = pass && c.verdict == Verdict::kUnboundedObserved;
  detail += fmt::format("eps=0.1 over 48 semicycles: {}", to_string(c.verdict));
  return {pass, detail};
}

Outcome decay_constructions() {
  int failures = 0;
  double worst_ratio = 0.0;
  double worst_margin = kInfinity;
  for (std::uint64_t i = 0; i < 50; ++i) {
    std::mt19937_64 rng = instance_rng(kDefaultSeed + 3, i);
    const ArchConstruction arch = random_arches(rng);
    const Trajectory traj = integrate(arch.problem, arch.horizon(), kDefaultStep);
    const auto zeros = find_zeros(traj);
    const double m = std::max(std::abs(arch.p_rise), std::abs(arch.p_fall));
    const double k = 1.0 / std::sqrt(m);
    const double threshold = semicycle_threshold(arch.tau_m / k);
    double longest = 0.0;
    for (const Semicycle& s : semicycles(traj, zeros)) longest = std::max(longest, s.length() / k);
    const EnvelopeFit fit = envelope_ratio(traj, zeros, arch.tau_m, k);
    worst_ratio = std::max(worst_ratio, fit.ratio);
    worst_margin = std::min(worst_margin, threshold - longest);
    if (!(m <= 1.0 && longest <= threshold - 0.05 && fit.ratio < 1.0)) ++failures;
  }
  return {failures == 0, fmt::format("{} failures; max ratio={:.3f} min threshold gap={:.3f}",
                                     failures, worst_ratio, worst_margin)};
}

Outcome margins() {
  double worst_descent = kInfinity;
  double worst_ascent = kInfinity;
  int descent = 0;
  int ascent = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    std::mt19937_64 rng = instance_rng(kDefaultSeed, i);
    const DelayProblem problem = random_normalized_problem(rng, 30.0);
    for (const MarginRecord& r : margin_checks(problem, 30.0)) {
      if (r.descent.applicable) {
        ++descent;
        worst_descent = std::min(worst_descent, r.descent.margin);
      }
      if (r.ascent.applicable) {
        ++ascent;
        worst_ascent = std::min(worst_ascent, r.ascent.margin);
      }
    }
  }
  return {worst_descent >= -1e-3 && worst_ascent >= -1e-3 && descent > 0 && ascent > 0,
          fmt::format("descent: {} checks, min margin {:.2e}; ascent: {} checks, min margin {:.2e}",
                      descent, worst_descent, ascent, worst_ascent)};
}

Outcome comparison() {
  double worst = 0.0;
  int not_applicable = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    std::mt19937_64 rng = instance_rng(kDefaultSeed + 1, i);
    const ComparisonPair pair = random_comparison_pair(rng, 10.0);
    const ComparisonResult r = verify_comparison(pair.minorant, pair.majorant, 10.0);
    if (!r.applicable) {
      ++not_applicable;
      continue;
    }
    worst = std::max(worst, r.worst_violation);
  }
  return {not_applicable == 0 && worst <= 1e-6,
          fmt::format("worst violation {:.2e}, {} pairs not applicable", worst, not_applicable)};
}

Outcome wronskian_positive() {
  int sign_changes = 0;
  double largest = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    std::mt19937_64 rng = instance_rng(kDefaultSeed + 2, i);
    const DelayProblem problem = random_negative_problem(rng, 50.0);
    largest = std::max(largest, criterion_wronskian_2e(problem).value);
    const auto profile = wronskian_profile(problem.p, problem.tau, 0.0, 50.0);
    if (std::any_of(profile.begin(), profile.end(),
                    [](const WronskianSample& s) { return s.sign <= 0; })) {
      ++sign_changes;
    }
  }
  return {sign_changes == 0 && largest <= 2.0 / std::numbers::e,
          fmt::format("{} instances with W <= 0; max tau_m sqrt|p| = {:.4f}", sign_changes, largest)};
}

Outcome sine_boundary() {
  const ExampleSpec spec{Example::kSinPi, 0.0, 6};
  const DelayProblem problem = build_example_problem(spec);
  const Trajectory traj = integrate(problem, example_horizon(spec), kDefaultStep);
  const double err = max_closed_form_error(spec, traj);
  const Classification c = classify(problem, traj);
  return {err < 1e-6 && c.verdict == Verdict::kInconclusive,
          fmt::format("err={:.1e} over 3 periods, verdict {}", err, to_string(c.verdict))};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "theta special values", 1, theta_values},
      {2, "psi special values", 30, psi_values},
      {3, "iteration vs shooting oracle", 120, oracle_agreement},
      {4, "gamma fixed point", 60, gamma_bracket},
      {5, "delay-4 spectrum table", 1, spectrum_table},
      {6, "example 2 reproduction", 60, example_two},
      {7, "example 3 reproduction", 60, example_three},
      {8, "decay of short-semicycle constructions", 300, decay_constructions},
      {9, "descent/ascent margins", 300, margins},
      {10, "comparison harness", 300, comparison},
      {11, "2/e Wronskian positivity", 300, wronskian_positive},
      {12, "sin boundary case", 60, sine_boundary},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = outcome.pass && seconds < c.budget_seconds;
    if (!pass) ++failed;
    fmt::print("[{}] criterion {:2d} {}: {} ({:.2f}s, budget {}s)\n", pass ? "PASS" : "FAIL", c.id,
               c.title, outcome.detail, seconds, c.budget_seconds);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
