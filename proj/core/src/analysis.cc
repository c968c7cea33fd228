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

#include "semicycle/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "semicycle/errors.h"
#include "semicycle/thresholds.h"

namespace semicycle {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool crosses(double y0, double y1) {
  return (y0 < 0.0 && y1 >= 0.0) || (y0 > 0.0 && y1 <= 0.0);
}

Interval tail_window(const DelayProblem& problem) {
  return {problem.start, kInfinity};
}

double cached_gamma() {
  static const double gamma = gamma_constant(1e-10);
  return gamma;
}

// First point in (lo, hi) where x' changes sign, or NaN.
double first_stationary(const Trajectory& traj, double lo, double hi) {
  const auto steps = traj.steps();
  for (std::size_t i = traj.step_index(lo); i < steps.size(); ++i) {
    const StepRecord& r = steps[i];
    if (r.t0 >= hi) break;
    const double u0 = std::max(lo, r.t0) - r.t0;
    const double u1 = std::min(hi, r.t1) - r.t0;
    if (u0 >= u1) continue;
    const Polynomial v = traj.velocity(i);
    const double probe = 1e-7 * (r.t1 - r.t0);
    for (double u : real_roots(v, u0, u1)) {
      const double t = r.t0 + u;
      if (t <= lo || t >= hi) continue;
      const double before = traj.dx(std::max(lo, t - probe));
      const double after = traj.dx(std::min(hi, t + probe));
      if (before * after <= 0.0) return t;
    }
  }
  return kNaN;
}

}  // namespace

std::vector<Zero> find_zeros(const Trajectory& traj, double tol) {
  std::vector<Zero> out;
  const auto steps = traj.steps();
  double xscale = 0.0;
  double vscale = 0.0;
  for (const StepRecord& r : steps) {
    xscale = std::max({xscale, std::abs(r.x0), std::abs(r.x1)});
    vscale = std::max({vscale, std::abs(r.v0), std::abs(r.v1)});
  }
  const double touch = std::max(tol, 1e-12 * xscale);
  const double flat = 1e-9 * std::max(vscale, 1e-300);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const StepRecord& r = steps[i];
    const double h = r.t1 - r.t0;
    const Polynomial x = traj.position(i);
    const Polynomial v = traj.velocity(i);
    const bool at_start = i == 0 && r.x0 == 0.0;
    if (crosses(r.x0, r.x1) || at_start) {
      for (double u : real_roots(x, 0.0, h)) {
        if (u == 0.0 && !at_start) continue;
        out.push_back({r.t0 + u, std::abs(v(u)) <= flat});
      }
      continue;
    }
    if (r.x0 == 0.0 || r.x1 == 0.0) continue;
    const double reach = h * std::max(std::abs(r.v0), std::abs(r.v1));
    if (std::min(std::abs(r.x0), std::abs(r.x1)) > 2 * reach + touch) continue;
    const std::vector<double> inner = real_roots(x, 0.0, h);
    if (!inner.empty()) {
      for (double u : inner) out.push_back({r.t0 + u, std::abs(v(u)) <= flat});
      continue;
    }
    for (double u : real_roots(v, 0.0, h)) {
      if (std::abs(x(u)) <= touch) out.push_back({r.t0 + u, true});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Zero& a, const Zero& b) { return a.t < b.t; });
  std::vector<Zero> merged;
  for (const Zero& z : out) {
    if (!merged.empty() && z.t - merged.back().t <= tol) {
      merged.back().tangential = true;
      continue;
    }
    merged.push_back(z);
  }
  return merged;
}

std::vector<Semicycle> semicycles(const Trajectory& traj,
                                  const std::vector<Zero>& zeros,
                                  double tol) {
  std::vector<Semicycle> out;
  for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
    const double a = zeros[i].t;
    const double b = zeros[i + 1].t;
    if (b - a < 10 * tol) {
      throw ResolutionError("adjacent zeros closer than the resolution");
    }
    double w = first_stationary(traj, a, b);
    if (std::isnan(w)) {
      // No resolved sign change of x': fall back to the largest node.
      w = (a + b) / 2;
      double best = std::abs(traj.x(w));
      for (std::size_t k = traj.step_index(a); k < traj.steps().size(); ++k) {
        const double t = traj.steps()[k].t1;
        if (t >= b) break;
        if (t > a && std::abs(traj.x(t)) > best) {
          best = std::abs(traj.x(t));
          w = t;
        }
      }
    }
    const double xw = traj.x(w);
    out.push_back({a, b, w, std::abs(xw), xw >= 0.0 ? 1 : -1});
  }
  return out;
}

BoundCheck check_descent(const Trajectory& traj, const Semicycle& sc,
                         double tau_m) {
  if (!(tau_m >= 0.0)) throw DomainError("tau_m must be nonnegative");
  const double lo = sc.w - tau_m;
  if (lo < traj.history_start() || !(sc.peak > 0.0)) {
    return {false, false, kNaN};
  }
  if (traj.max_abs(lo, sc.w) > sc.peak * (1.0 + 1e-9)) {
    return {false, false, kNaN};
  }
  const double margin = (sc.b - sc.w) - theta(tau_m);
  return {true, margin >= -kMarginSlack, margin};
}

double ascent_rho(const Trajectory& traj, const Semicycle& sc, double delta) {
  const double lo = sc.a - delta - theta(delta);
  if (lo < traj.history_start()) {
    throw DomainError("ascent window precedes the initial data");
  }
  return traj.max_abs(lo, sc.a) / sc.peak;
}

BoundCheck check_ascent(const Trajectory& traj, const Semicycle& sc,
                        double delta, double rho_hat) {
  if (!(delta >= 0.0)) throw DomainError("delta must be nonnegative");
  const double th = theta(delta);
  if (sc.a - th < traj.start() ||
      sc.a - delta - th < traj.history_start() || !(sc.peak > 0.0)) {
    return {false, false, kNaN};
  }
  const double rho = std::max(rho_hat, 1e-12);
  const double margin = (sc.w - sc.a) - psi(rho, delta);
  return {true, margin >= -kMarginSlack, margin};
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kTendsToZeroCertified:
      return "tends_to_zero_certified";
    case Verdict::kBoundedCertified:
      return "bounded_certified";
    case Verdict::kUnboundedObserved:
      return "unbounded_observed";
    case Verdict::kNonoscillatoryObserved:
      return "nonoscillatory_observed";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Classification classify(const DelayProblem& problem, const Trajectory& traj,
                        const ClassifyOptions& options) {
  const Interval window{traj.start(), traj.end()};
  if (!(window.hi > window.lo)) {
    throw InsufficientWindowError("trajectory has no extent");
  }
  const double m = esssup_abs(problem.p, window);
  const double tau_m = std::max(0.0, problem.tau.range(window).max);
  const double k = m > 0.0 ? 1.0 / std::sqrt(m) : 1.0;
  const double tau_n = tau_m / k;
  const double big_theta = options.threshold ? options.threshold(tau_n)
                                             : semicycle_threshold(tau_n);

  Classification out{Verdict::kInconclusive, {}, {}, false, k};
  out.evidence.push_back({"normalized_tau_m", tau_n, 0.0});
  out.evidence.push_back({"semicycle_threshold", big_theta, 0.0});

  const std::vector<Zero> zeros = find_zeros(traj);
  out.degenerate_zeros = std::any_of(zeros.begin(), zeros.end(),
                                     [](const Zero& z) { return z.tangential; });
  const double last_zero = zeros.empty() ? window.lo : zeros.back().t;
  const double tail = (window.hi - last_zero) / k;
  const double certificate = 2 * (tau_n + big_theta);
  const bool nonpositive = problem.p.range(window).max <= 0.0;
  if (tail >= certificate) {
    out.verdict = Verdict::kNonoscillatoryObserved;
    out.evidence.push_back({"zero_free_tail", tail, certificate});
    if (nonpositive) {
      // Positive solutions with p <= 0 either grow without bound together
      // with x' or decay monotonically to zero; report which one the tail
      // follows (> 1 growing, < 1 decaying).
      const double mid = (last_zero + window.hi) / 2;
      const double a = std::abs(traj.x(mid));
      const double b = std::abs(traj.x(window.hi));
      out.evidence.push_back(
          {"kamenskii_tail_ratio", a > 0.0 ? b / a : kInfinity, 1.0});
    }
    return out;
  }

  out.semicycles = semicycles(traj, zeros);
  if (out.semicycles.size() < 3) {
    throw InsufficientWindowError(
        "window holds fewer than three semicycles and no zero-free tail");
  }
  double longest = 0.0;
  for (const Semicycle& sc : out.semicycles) {
    longest = std::max(longest, sc.length());
  }
  const double len = longest / k;
  out.evidence.push_back({"max_semicycle_length", len, big_theta});

  bool decays = false;
  bool bounded = false;
  if (nonpositive) {
    const double g = options.gamma ? options.gamma() : cached_gamma();
    out.evidence.push_back({"negative_coefficient_delay", tau_n, g});
    if (tau_n < g - options.equality_tol) {
      decays = true;
    } else if (tau_n <= g + options.equality_tol) {
      bounded = true;
    }
  }
  if (len <= big_theta - options.margin) {
    decays = true;
  } else if (len <= big_theta + options.equality_tol) {
    const bool at_boundary = std::abs(len - big_theta) <= options.equality_tol;
    if (tau_n > 0.0 || !at_boundary) bounded = true;
  }
  if (decays) {
    out.verdict = Verdict::kTendsToZeroCertified;
    return out;
  }
  if (bounded) {
    out.verdict = Verdict::kBoundedCertified;
    return out;
  }

  const auto& scs = out.semicycles;
  bool monotone = true;
  for (std::size_t i = 1; i < scs.size(); ++i) {
    if (scs[i].peak < scs[i - 1].peak * (1.0 - 1e-9)) monotone = false;
  }
  const double growth = scs.back().peak / scs.front().peak;
  out.evidence.push_back({"peak_growth", growth, options.growth_factor});
  out.verdict = monotone && growth >= options.growth_factor
                    ? Verdict::kUnboundedObserved
                    : Verdict::kInconclusive;
  return out;
}

MyshkisResult criterion_myshkis(const DelayProblem& problem) {
  const Interval window = tail_window(problem);
  const ValueRange p = problem.p.range(window);
  const double tau_m = std::max(0.0, problem.tau.range(window).max);
  if (p.min < 0.0) return {false, false, false, kNaN};
  const double value = tau_m * std::sqrt(p.max);
  const double bound = 2 * std::numbers::sqrt2;
  return {true, value <= bound * (1 + 1e-12), value < bound * (1 - 1e-12),
          value};
}

GustafsonResult criterion_gustafson(const DelayProblem& problem,
                                    double horizon) {
  if (!(horizon > problem.start)) {
    throw DomainError("horizon must exceed the start time");
  }
  if (problem.p.range({problem.start - tau_max(problem, horizon), horizon})
          .max > 0.0) {
    return {false, false, kNaN};
  }
  constexpr int kGrid = 4000;
  double sup = -kInfinity;
  double prev_arg = -kInfinity;
  for (int i = 0; i <= kGrid; ++i) {
    const double t =
        problem.start + (horizon - problem.start) * i / static_cast<double>(kGrid);
    const double d = t - problem.tau(t);
    if (d < prev_arg - 1e-12 * (1.0 + std::abs(d))) {
      return {false, false, kNaN};
    }
    prev_arg = d;
    double integral = 0.0;
    for (const SignalPiece& piece : problem.p.pieces({d, t})) {
      // (u + origin - d) * |p|, with |p| = -p.
      const Polynomial integrand =
          Polynomial({piece.origin - d, 1.0}) * (-1.0 * piece.poly);
      const Polynomial anti = integrand.antiderivative();
      integral += anti(piece.hi - piece.origin) - anti(piece.lo - piece.origin);
    }
    sup = std::max(sup, integral);
  }
  return {true, sup > 1.0 + 1e-12, sup};
}

WronskianCriterion criterion_wronskian_2e(const DelayProblem& problem) {
  const Interval window = tail_window(problem);
  const double tau_m = std::max(0.0, problem.tau.range(window).max);
  const double value = tau_m * std::sqrt(esssup_abs(problem.p, window));
  return {value <= 2.0 / std::numbers::e * (1 + 1e-12), value};
}

ComparisonResult verify_comparison(const DelayProblem& minorant,
                                   const DelayProblem& majorant,
                                   double horizon, double step, double tol) {
  auto not_applicable = [](std::string why) {
    return ComparisonResult{false, false, kNaN, std::move(why)};
  };
  const double s = minorant.start;
  if (majorant.start != s) return not_applicable("start times differ");
  if (!(horizon > s)) throw DomainError("horizon must exceed the start time");
  const double z0 = minorant.initial_value;
  const double y0 = majorant.initial_value;
  if (z0 == 0.0) return not_applicable("z(s) vanishes");
  if (!(y0 > 0.0)) return not_applicable("y(s) is not positive");

  const double tau_m = tau_max(minorant, horizon);
  const double big_t = tau_max(majorant, horizon);

  // Majorant parameters, checked at breakpoints, midpoints and a uniform
  // sample of [s, horizon].
  std::vector<double> probes;
  for (const PiecewiseSignal* sig :
       {&minorant.p, &minorant.tau, &majorant.p, &majorant.tau}) {
    for (const SignalPiece& piece : sig->pieces({s, horizon})) {
      probes.insert(probes.end(),
                    {piece.lo, (piece.lo + piece.hi) / 2,
                     std::nextafter(piece.hi, piece.lo)});
    }
  }
  for (int i = 0; i <= 2000; ++i) probes.push_back(s + (horizon - s) * i / 2000.0);
  for (double t : probes) {
    if (majorant.p(t) < std::abs(minorant.p(t)) - 1e-12) {
      return not_applicable("majorant coefficient below |p|");
    }
    if (majorant.tau(t) < minorant.tau(t) - 1e-12) {
      return not_applicable("majorant delay below tau");
    }
  }

  // y positive and nonincreasing on its initial interval.
  if (majorant.initial_slope > 0.0) {
    return not_applicable("y'(s) is positive");
  }
  if (big_t > 0.0) {
    const Interval hist{s - big_t, s};
    if (majorant.history.range(hist).min <= 0.0) {
      return not_applicable("y history is not positive");
    }
    for (const SignalPiece& piece : majorant.history.pieces(hist)) {
      if (piece.poly.degree() == 0) continue;
      const ValueRange slope = value_range(piece.poly.derivative(),
                                           piece.lo - piece.origin,
                                           piece.hi - piece.origin);
      if (slope.max > 1e-12) return not_applicable("y history increases");
    }
  }

  // |z/z(s)| <= y/y(s) on the data interval, and the matching slope order.
  if (minorant.initial_slope / z0 < majorant.initial_slope / y0 - 1e-12) {
    return not_applicable("slope condition fails at s");
  }
  if (tau_m > 0.0) {
    std::vector<double> hist_probes;
    for (const SignalPiece& piece :
         minorant.history.pieces({s - tau_m, s})) {
      hist_probes.insert(hist_probes.end(),
                         {piece.lo, (piece.lo + piece.hi) / 2});
    }
    for (int i = 0; i < 2000; ++i) {
      hist_probes.push_back(s - tau_m + tau_m * i / 2000.0);
    }
    for (double t : hist_probes) {
      if (t >= s) continue;
      if (std::abs(minorant.history(t) / z0) >
          majorant.history(t) / y0 + 1e-12) {
        return not_applicable("initial data of z exceed the majorant");
      }
    }
  }

  const Trajectory z = integrate(minorant, horizon, step);
  const Trajectory y = integrate(majorant, horizon, step);
  double first_zero = horizon;
  for (const TrajectoryEvent& e : y.events()) {
    if (e.kind == TrajectoryEvent::Kind::kZero && e.t > s) {
      first_zero = e.t;
      break;
    }
  }
  double worst = 0.0;
  auto probe = [&](double t) {
    if (t < s || t >= first_zero) return;
    worst = std::max(worst, y.x(t) / y0 - z.x(t) / z0);
  };
  for (const StepRecord& r : y.steps()) probe(r.t0);
  for (const StepRecord& r : z.steps()) probe(r.t0);
  return {true, worst <= tol, worst, ""};
}

EnvelopeFit envelope_ratio(const Trajectory& traj,
                           const std::vector<Zero>& zeros, double tau_m,
                           double k) {
  if (!(k > 0.0)) throw DomainError("time scale must be positive");
  if (zeros.empty()) throw InsufficientWindowError("no zeros to anchor windows");
  const double spacing = tau_m + k * theta(tau_m / k);
  std::vector<double> anchors{zeros.front().t};
  for (const Zero& z : zeros) {
    if (z.t > anchors.back() + spacing) anchors.push_back(z.t);
  }
  EnvelopeFit fit{kNaN, {}};
  for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
    fit.window_peaks.push_back(traj.max_abs(anchors[i], anchors[i + 1]));
  }
  const std::size_t n = fit.window_peaks.size();
  if (n < 2) throw InsufficientWindowError("fewer than two envelope windows");
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i);
    const double y = std::log(fit.window_peaks[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.ratio = std::exp(slope);
  return fit;
}

}  // namespace semicycle
