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

#include "semicycle/integrator.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "semicycle/errors.h"

namespace semicycle {
namespace {

double hermite_value(double t0, double t1, double y0, double y1, double m0,
                     double m1, double t) {
  const double h = t1 - t0;
  const double s = (t - t0) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * h * m0 +
         (-2 * s3 + 3 * s2) * y1 + (s3 - s2) * h * m1;
}

Polynomial hermite_poly(double h, double y0, double y1, double m0,
                        double m1) {
  const double slope = (y1 - y0) / h;
  return Polynomial({y0, m0, (3 * slope - 2 * m0 - m1) / h,
                     (m0 + m1 - 2 * slope) / (h * h)});
}

double step_x(const StepRecord& r, double t) {
  return hermite_value(r.t0, r.t1, r.x0, r.x1, r.v0, r.v1, t);
}

double step_v(const StepRecord& r, double t) {
  return hermite_value(r.t0, r.t1, r.v0, r.v1, r.a0, r.a1, t);
}

void sort_unique(std::vector<double>& v, double gap) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double t : v) {
    if (out.empty() || t - out.back() > gap) out.push_back(t);
  }
  v = std::move(out);
}

// Integration state of one solution. History nullptr means zero history.
struct Column {
  const PiecewiseSignal* history;
  double x;
  double v;
  std::vector<StepRecord> steps;
};

// Shared method-of-steps machinery; several columns can be advanced in
// lockstep over the same nodes.
class Engine {
 public:
  Engine(const PiecewiseSignal& p, const PiecewiseSignal& tau, double start,
         double history_start)
      : p_(p), tau_(tau), start_(start), history_start_(history_start) {}

  std::vector<double> nodes(double horizon, double step,
                            const PiecewiseSignal* history) const {
    std::vector<double> forced{start_, horizon};
    std::vector<double> targets{start_};
    auto add_breakpoints = [&](const PiecewiseSignal& sig) {
      for (double b : sig.breakpoints()) {
        targets.push_back(b);
        if (b > start_ && b < horizon) forced.push_back(b);
      }
    };
    add_breakpoints(p_);
    add_breakpoints(tau_);
    if (history != nullptr) {
      for (double b : history->breakpoints()) targets.push_back(b);
    }
    sort_unique(targets, 0.0);
    // First-generation points: t - tau(t) = target.
    for (const SignalPiece& piece : tau_.pieces({start_, horizon})) {
      const Polynomial lag_free =
          Polynomial({piece.origin, 1.0}) - piece.poly;
      const double lo = piece.lo - piece.origin;
      const double hi = piece.hi - piece.origin;
      for (double c : targets) {
        const Polynomial g = lag_free - Polynomial::constant(c);
        for (double u : real_roots(g, lo, hi)) {
          const double t = piece.origin + u;
          if (t > start_ && t < horizon) forced.push_back(t);
        }
      }
    }
    sort_unique(forced, 1e-10);
    if (forced.back() < horizon) forced.back() = horizon;

    std::vector<double> grid{forced.front()};
    for (std::size_t i = 0; i + 1 < forced.size(); ++i) {
      const double a = forced[i];
      const double b = forced[i + 1];
      const auto n = std::max<std::size_t>(
          1, static_cast<std::size_t>(std::ceil((b - a) / step - 1e-9)));
      for (std::size_t k = 1; k < n; ++k) {
        grid.push_back(a + (b - a) * static_cast<double>(k) /
                               static_cast<double>(n));
      }
      grid.push_back(b);
    }
    return grid;
  }

  void advance(std::span<Column> columns, double t0, double t1) const {
    const double h = t1 - t0;
    const double mid = (t0 + t1) / 2;
    const SignalPiece coeff = p_.piece_at(mid);
    const SignalPiece delay = tau_.piece_at(mid);
    const double times[3] = {t0, mid, t1};
    double pv[3];
    double lag[3];
    double arg[3];
    bool inside = false;
    for (int k = 0; k < 3; ++k) {
      pv[k] = coeff(times[k]);
      lag[k] = delay(times[k]);
      if (lag[k] < -1e-12) throw DomainError("delay signal is negative");
      lag[k] = std::max(lag[k], 0.0);
      // Stage 0 needs the right limit of the delayed argument, stage 2 the
      // left limit; nudge off breakpoints accordingly.
      const double nudge = 1e-13 * (1.0 + std::abs(times[k] - lag[k]));
      arg[k] = times[k] - lag[k] + (k == 0 ? nudge : k == 2 ? -nudge : 0.0);
      if (lag[k] > 0.0 && arg[k] > t0) inside = true;
    }

    for (Column& col : columns) {
      const double x0 = col.x;
      const double v0 = col.v;
      StepRecord tent{t0, t1, x0, x0, v0, v0, 0.0, 0.0};
      bool have_tent = false;
      auto delayed = [&](int k, double stage_x) {
        if (lag[k] == 0.0) return stage_x;
        const double d = arg[k];
        if (d <= t0) return past(col, d);
        if (!have_tent) {
          const double dt = d - t0;
          return x0 + v0 * dt + tent.a0 * dt * dt / 2;
        }
        return step_x(tent, std::min(d, t1));
      };
      tent.a0 = -pv[0] * delayed(0, x0);
      const int passes = inside ? 3 : 1;
      for (int pass = 0; pass < passes; ++pass) {
        const double k1y = v0;
        const double k1v = -pv[0] * delayed(0, x0);
        const double k2y = v0 + h / 2 * k1v;
        const double k2v = -pv[1] * delayed(1, x0 + h / 2 * k1y);
        const double k3y = v0 + h / 2 * k2v;
        const double k3v = -pv[1] * delayed(1, x0 + h / 2 * k2y);
        const double k4y = v0 + h * k3v;
        const double k4v = -pv[2] * delayed(2, x0 + h * k3y);
        tent.x1 = x0 + h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
        tent.v1 = v0 + h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
        tent.a1 = have_tent ? tent.a1 : k4v;
        have_tent = true;
        tent.a1 = -pv[2] * delayed(2, tent.x1);
      }
      col.steps.push_back(tent);
      col.x = tent.x1;
      col.v = tent.v1;
    }
  }

 private:
  double past(const Column& col, double d) const {
    if (d < start_) {
      if (d < history_start_ - 1e-9 * (1.0 + std::abs(history_start_))) {
        throw HistoryError("delayed argument precedes the initial data");
      }
      return col.history != nullptr ? (*col.history)(d) : 0.0;
    }
    if (col.steps.empty()) return col.x;
    const auto it = std::upper_bound(
        col.steps.begin(), col.steps.end(), d,
        [](double t, const StepRecord& r) { return t < r.t0; });
    if (it == col.steps.begin()) return col.steps.front().x0;
    const StepRecord& r = *(it - 1);
    if (d >= r.t1) return r.x1;
    return step_x(r, d);
  }

  const PiecewiseSignal& p_;
  const PiecewiseSignal& tau_;
  double start_;
  double history_start_;
};

double resolve_history_start(const DelayProblem& problem, double horizon) {
  if (problem.history_start) return *problem.history_start;
  return problem.start - tau_max(problem, horizon);
}

void validate(const DelayProblem& problem, double horizon, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw DomainError("step must be positive");
  }
  if (!(horizon > problem.start) || !std::isfinite(horizon)) {
    throw DomainError("horizon must exceed the start time");
  }
  if (problem.tau.range({problem.start, horizon}).min < -1e-12) {
    throw DomainError("delay signal is negative on the horizon");
  }
}

}  // namespace

double tau_max(const DelayProblem& problem, double horizon) {
  if (horizon < problem.start) {
    throw DomainError("horizon must not precede the start time");
  }
  return std::max(0.0, problem.tau.range({problem.start, horizon}).max);
}

DelayProblem rescale(const DelayProblem& problem, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("scale factor must be positive");
  }
  DelayProblem out{
      problem.p.time_scaled(k).value_scaled(k * k),
      problem.tau.time_scaled(k).value_scaled(1.0 / k),
      problem.start / k,
      problem.history.time_scaled(k),
      problem.initial_value,
      problem.initial_slope * k,
      std::nullopt,
  };
  if (problem.history_start) out.history_start = *problem.history_start / k;
  return out;
}

std::pair<DelayProblem, double> normalized(const DelayProblem& problem,
                                           Interval window) {
  const double m = esssup_abs(problem.p, window);
  if (!(m > 0.0)) throw DomainError("coefficient vanishes on the window");
  const double k = 1.0 / std::sqrt(m);
  return {rescale(problem, k), k};
}

Trajectory::Trajectory(double start, double history_start,
                       PiecewiseSignal history, std::vector<StepRecord> steps)
    : start_(start),
      history_start_(history_start),
      history_(std::move(history)),
      steps_(std::move(steps)) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const StepRecord& r = steps_[i];
    const double h = r.t1 - r.t0;
    auto scan = [&](double y0, double y1, const Polynomial& poly,
                    TrajectoryEvent::Kind kind) {
      const bool change = (y0 < 0.0 && y1 >= 0.0) || (y0 > 0.0 && y1 <= 0.0) ||
                          (i == 0 && y0 == 0.0);
      if (!change) return;
      for (double u : real_roots(poly, 0.0, h)) {
        if (u == 0.0 && !(i == 0 && y0 == 0.0)) continue;
        const double t = r.t0 + u;
        events_.push_back({kind, t, step_x(r, t)});
      }
    };
    scan(r.x0, r.x1, position(i), TrajectoryEvent::Kind::kZero);
    scan(r.v0, r.v1, velocity(i), TrajectoryEvent::Kind::kExtremum);
  }
  std::stable_sort(events_.begin(), events_.end(),
                   [](const TrajectoryEvent& a, const TrajectoryEvent& b) {
                     return a.t < b.t;
                   });
}

void Trajectory::require_in_domain(double t) const {
  const double slack = 1e-12 * (1.0 + std::abs(t));
  if (!(t >= history_start_ - slack) || !(t <= end() + slack)) {
    throw DomainError("time outside the trajectory domain");
  }
}

std::size_t Trajectory::step_index(double t) const {
  if (steps_.empty()) throw DomainError("trajectory has no steps");
  const auto it = std::upper_bound(
      steps_.begin(), steps_.end(), t,
      [](double v, const StepRecord& r) { return v < r.t0; });
  if (it == steps_.begin()) return 0;
  return static_cast<std::size_t>(it - steps_.begin()) - 1;
}

double Trajectory::x(double t) const {
  require_in_domain(t);
  if (t < start_) return history_(t);
  if (steps_.empty()) throw DomainError("trajectory has no steps");
  return step_x(steps_[step_index(t)], std::min(t, end()));
}

double Trajectory::dx(double t) const {
  require_in_domain(t);
  if (t < start_) {
    const SignalPiece piece = history_.piece_at(t);
    return piece.poly.derivative()(t - piece.origin);
  }
  if (steps_.empty()) throw DomainError("trajectory has no steps");
  return step_v(steps_[step_index(t)], std::min(t, end()));
}

std::vector<TrajectoryNode> Trajectory::nodes() const {
  std::vector<TrajectoryNode> out;
  if (steps_.empty()) return out;
  out.reserve(steps_.size() + 1);
  for (const StepRecord& r : steps_) out.push_back({r.t0, r.x0, r.v0});
  out.push_back({steps_.back().t1, steps_.back().x1, steps_.back().v1});
  return out;
}

Polynomial Trajectory::position(std::size_t i) const {
  const StepRecord& r = steps_.at(i);
  return hermite_poly(r.t1 - r.t0, r.x0, r.x1, r.v0, r.v1);
}

Polynomial Trajectory::velocity(std::size_t i) const {
  const StepRecord& r = steps_.at(i);
  return hermite_poly(r.t1 - r.t0, r.v0, r.v1, r.a0, r.a1);
}

double Trajectory::max_abs(double lo, double hi) const {
  lo = std::max(lo, history_start_);
  hi = std::min(hi, end());
  if (lo > hi) throw DomainError("empty interval for max_abs");
  double best = 0.0;
  if (lo < start_) {
    best = esssup_abs(history_, {lo, std::min(hi, start_)});
  }
  if (hi >= start_ && !steps_.empty()) {
    const double a = std::max(lo, start_);
    for (std::size_t i = step_index(a); i < steps_.size(); ++i) {
      const StepRecord& r = steps_[i];
      if (r.t0 > hi) break;
      const double u0 = std::max(a, r.t0) - r.t0;
      const double u1 = std::min(hi, r.t1) - r.t0;
      if (u0 > u1) continue;
      const ValueRange range = value_range(position(i), u0, u1);
      best = std::max({best, std::abs(range.min), std::abs(range.max)});
    }
  }
  return best;
}

Trajectory integrate(const DelayProblem& problem, double horizon,
                     double step) {
  validate(problem, horizon, step);
  const double history_start = resolve_history_start(problem, horizon);
  const Engine engine(problem.p, problem.tau, problem.start, history_start);
  const std::vector<double> grid =
      engine.nodes(horizon, step, &problem.history);
  Column col{&problem.history, problem.initial_value, problem.initial_slope,
             {}};
  col.steps.reserve(grid.size());
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    engine.advance({&col, 1}, grid[i], grid[i + 1]);
  }
  return Trajectory(problem.start, history_start, problem.history,
                    std::move(col.steps));
}

std::pair<Trajectory, Trajectory> fundamental_system(
    const PiecewiseSignal& p, const PiecewiseSignal& tau, double s,
    double horizon, double step) {
  DelayProblem z{p, tau, s, PiecewiseSignal::constant(0.0), 1.0, 0.0, {}};
  DelayProblem y{p, tau, s, PiecewiseSignal::constant(0.0), 0.0, 1.0, {}};
  return {integrate(z, horizon, step), integrate(y, horizon, step)};
}

double wronskian(const Trajectory& z, const Trajectory& y, double t) {
  const double lo = std::max(z.start(), y.start());
  const double hi = std::min(z.end(), y.end());
  if (t < lo || t > hi) throw DomainError("time outside both trajectories");
  return z.x(t) * y.dx(t) - z.dx(t) * y.x(t);
}

std::vector<WronskianSample> wronskian_profile(const PiecewiseSignal& p,
                                               const PiecewiseSignal& tau,
                                               double s, double horizon,
                                               double step) {
  const DelayProblem probe{p, tau, s, PiecewiseSignal::constant(0.0), 0.0,
                           0.0, {}};
  validate(probe, horizon, step);
  const double lookback = tau_max(probe, horizon);
  const Engine engine(p, tau, s, s - lookback);
  const std::vector<double> grid = engine.nodes(horizon, step, nullptr);

  Column cols[2] = {{nullptr, 1.0, 0.0, {}}, {nullptr, 0.0, 1.0, {}}};
  double log_scale = 0.0;
  std::vector<WronskianSample> out;
  out.reserve(grid.size());
  auto sample = [&](double t) {
    const double det = cols[0].x * cols[1].v - cols[0].v * cols[1].x;
    const int sign = det > 0.0 ? 1 : det < 0.0 ? -1 : 0;
    out.push_back({t, sign, std::log(std::abs(det)) + log_scale});
  };
  // Replaces the basis (z, y) by (z, y) R^{-1}, where R is the
  // Gram-Schmidt factor of the current state, on the whole lookback window.
  auto renormalize = [&](double t) {
    const double r11 = std::hypot(cols[0].x, cols[0].v);
    if (!(r11 > 0.0)) return;
    const double q1x = cols[0].x / r11;
    const double q1v = cols[0].v / r11;
    const double r12 = q1x * cols[1].x + q1v * cols[1].v;
    const double r22 = std::hypot(cols[1].x - r12 * q1x, cols[1].v - r12 * q1v);
    if (!(r22 > 0.0)) return;
    const double c11 = 1.0 / r11;
    const double c12 = -r12 / (r11 * r22);
    const double c22 = 1.0 / r22;
    auto mix = [&](double& a, double& b) {
      const double na = c11 * a;
      const double nb = c12 * a + c22 * b;
      a = na;
      b = nb;
    };
    mix(cols[0].x, cols[1].x);
    mix(cols[0].v, cols[1].v);
    const double cutoff = t - lookback - 2 * step;
    for (std::size_t i = cols[0].steps.size(); i-- > 0;) {
      StepRecord& a = cols[0].steps[i];
      StepRecord& b = cols[1].steps[i];
      if (a.t1 < cutoff) break;
      mix(a.x0, b.x0);
      mix(a.x1, b.x1);
      mix(a.v0, b.v0);
      mix(a.v1, b.v1);
      mix(a.a0, b.a0);
      mix(a.a1, b.a1);
    }
    log_scale += std::log(r11) + std::log(r22);
  };

  sample(grid.front());
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    engine.advance(cols, grid[i], grid[i + 1]);
    const double norm = std::max(std::hypot(cols[0].x, cols[0].v),
                                 std::hypot(cols[1].x, cols[1].v));
    if (i % 64 == 63 || norm > 1e3 || norm < 1e-3) renormalize(grid[i + 1]);
    sample(grid[i + 1]);
  }
  return out;
}

}  // namespace semicycle
