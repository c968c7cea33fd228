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

#include "semicycle/thresholds.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "semicycle/errors.h"

namespace semicycle {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kSqrt2 = std::numbers::sqrt2;

void require_delta(double delta) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw DomainError("delay bound must be finite and nonnegative");
  }
}

void require_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError("rho must be finite and positive");
  }
}

// Running integrals of the linear interpolant of f over a uniform grid:
// C(v) = int_{lo}^{v} f, D(v) = int_{lo}^{v} C. Left of the grid f is
// extended by its first sample.
class CumulativeIntegrals {
 public:
  CumulativeIntegrals(double lo, double h, std::span<const double> f)
      : lo_(lo), h_(h), f_(f), c_(f.size()), d_(f.size()) {
    c_[0] = d_[0] = 0.0;
    for (std::size_t j = 0; j + 1 < f.size(); ++j) {
      c_[j + 1] = c_[j] + h * (f[j] + f[j + 1]) / 2;
      d_[j + 1] = d_[j] + h * c_[j] + h * h * (2 * f[j] + f[j + 1]) / 6;
    }
  }

  void at(double v, double& c, double& d) const {
    if (v <= lo_) {
      const double dv = v - lo_;
      c = f_[0] * dv;
      d = f_[0] * dv * dv / 2;
      return;
    }
    auto j = static_cast<std::size_t>((v - lo_) / h_);
    j = std::min(j, f_.size() - 2);
    const double dv = v - (lo_ + h_ * static_cast<double>(j));
    const double slope = (f_[j + 1] - f_[j]) / h_;
    c = c_[j] + f_[j] * dv + slope * dv * dv / 2;
    d = d_[j] + c_[j] * dv + f_[j] * dv * dv / 2 + slope * dv * dv * dv / 6;
  }

  double d_node(std::size_t j) const { return d_[j]; }
  double d_end() const { return d_.back(); }

  // h(v) = int_v^0 int_v^s f = D(0) - D(v) + v C(v).
  double double_integral(double v) const {
    double c = 0.0;
    double d = 0.0;
    at(v, c, d);
    return d_end() - d + v * c;
  }

 private:
  double lo_;
  double h_;
  std::span<const double> f_;
  std::vector<double> c_;
  std::vector<double> d_;
};

}  // namespace

double eval_r(double delta, double t) {
  require_delta(delta);
  if (t <= 0.0) return 1.0;
  if (delta == 0.0) return std::cos(t);
  const double n = std::ceil(t / delta);
  double sum = 1.0;
  double sign = -1.0;
  for (int k = 1; k <= static_cast<int>(n); ++k, sign = -sign) {
    const double base = t - (k - 1) * delta;
    double term = 1.0;
    for (int j = 1; j <= 2 * k; ++j) term *= base / j;
    sum += sign * term;
    if (term < 1e-22 && base < 2 * k) break;
  }
  return sum;
}

double theta(double delta) {
  require_delta(delta);
  if (delta == 0.0) return kHalfPi;
  double lo = kSqrt2;
  double hi = kHalfPi;
  if (eval_r(delta, lo) <= 0.0) return lo;
  while (eval_r(delta, hi) > 0.0) hi += 0.01;
  for (int i = 0; i < 200 && hi - lo > 4e-16; ++i) {
    const double mid = (lo + hi) / 2;
    (eval_r(delta, mid) > 0.0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

ComparisonSolution::ComparisonSolution(double delta)
    : delta_(delta), theta_(theta(delta)) {}

double ComparisonSolution::forcing(double rho, double w) const {
  if (w < -delta_ || w > 0.0) return 0.0;
  return rho * eval_r(delta_, theta_ - w - delta_);
}

double forcing_term(double rho, double delta, double w) {
  require_delta(delta);
  return ComparisonSolution(delta).forcing(rho, w);
}

ThresholdResult beta_iterate(double rho, double delta, std::size_t grid_size,
                             double tol, int max_iter,
                             const BetaObserver& observer) {
  require_rho(rho);
  require_delta(delta);
  if (grid_size < 64) throw DomainError("grid_size must be at least 64");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (max_iter < 1) throw DomainError("max_iter must be at least 1");

  const ComparisonSolution r(delta);
  const std::size_t n = grid_size;
  const double lo = -kHalfPi;
  const double h = kHalfPi / static_cast<double>(n - 1);
  auto node = [&](std::size_t j) { return lo + h * static_cast<double>(j); };

  std::vector<double> forcing(n);
  for (std::size_t j = 0; j < n; ++j) forcing[j] = r.forcing(rho, node(j));
  std::vector<double> beta(n, 1.0);
  std::vector<double> f(n);
  std::vector<double> omegas;

  for (int step = 0; step < max_iter; ++step) {
    for (std::size_t j = 0; j < n; ++j) f[j] = std::max(beta[j], forcing[j]);
    const CumulativeIntegrals integrals(lo, h, f);

    double a = lo;
    for (int grow = 0; integrals.double_integral(a) < 1.0; ++grow) {
      if (grow == 40) throw ConvergenceError("h_n never reaches 1");
      a -= 0.25;
    }
    double b = 0.0;
    for (int i = 0; i < 200 && b - a > 1e-15; ++i) {
      const double mid = (a + b) / 2;
      (integrals.double_integral(mid) > 1.0 ? a : b) = mid;
    }
    const double v_star = (a + b) / 2;
    double c_star = 0.0;
    double d_star = 0.0;
    integrals.at(v_star, c_star, d_star);
    auto next_beta = [&](double w, double d_w) {
      return 1.0 - (d_w - d_star - (w - v_star) * c_star);
    };
    for (std::size_t j = 0; j < n; ++j) {
      beta[j] = node(j) <= v_star ? 1.0 : next_beta(node(j), integrals.d_node(j));
    }

    const double omega = -v_star;
    omegas.push_back(omega);
    if (observer) observer(step, omega, beta);
    const std::size_t m = omegas.size();
    if (m >= 2 && std::abs(omegas[m - 1] - omegas[m - 2]) < tol) {
      std::vector<double> profile(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double w =
            v_star + omega * static_cast<double>(i) / static_cast<double>(n - 1);
        double c = 0.0;
        double d = 0.0;
        integrals.at(w, c, d);
        profile[i] = next_beta(w, d);
      }
      return {omega, step + 1, std::move(omegas),
              GridFunction(v_star, 0.0, std::move(profile))};
    }
  }
  const std::size_t m = omegas.size();
  throw IterationLimitError("beta iteration did not converge",
                            m >= 2 ? omegas[m - 2] : omegas.back(),
                            omegas.back());
}

double psi(double rho, double delta) {
  return beta_iterate(rho, delta).psi;
}

double psi_oracle_bvp(double rho, double delta, std::size_t mesh) {
  require_rho(rho);
  require_delta(delta);
  if (mesh < 256) throw DomainError("oracle mesh must be at least 256");
  const ComparisonSolution r(delta);
  const double h = kHalfPi / static_cast<double>(mesh);
  const auto steps = static_cast<std::size_t>(std::ceil((kHalfPi + 0.25) / h));
  // Forcing sampled at every RK4 stage abscissa u = i h / 2, w = -u.
  std::vector<double> forcing(2 * steps + 1);
  for (std::size_t i = 0; i < forcing.size(); ++i) {
    forcing[i] = r.forcing(rho, -0.5 * h * static_cast<double>(i));
  }
  auto accel = [&](double y, std::size_t i) {
    return -std::max(y, forcing[i]);
  };

  struct Stationary {
    double at;
    double value;
  };
  // Integrates Y'' = -max(Y, F(-u)), Y(0) = 0, Y'(0) = slope forward in u
  // until Y' vanishes.
  auto shoot = [&](double slope) -> Stationary {
    double y = 0.0;
    double v = slope;
    for (std::size_t i = 0; i < steps; ++i) {
      const double k1y = v;
      const double k1v = accel(y, 2 * i);
      const double k2y = v + h / 2 * k1v;
      const double k2v = accel(y + h / 2 * k1y, 2 * i + 1);
      const double k3y = v + h / 2 * k2v;
      const double k3v = accel(y + h / 2 * k2y, 2 * i + 1);
      const double k4y = v + h * k3v;
      const double k4v = accel(y + h * k3y, 2 * i + 2);
      const double y1 = y + h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
      const double v1 = v + h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
      if (v1 <= 0.0) {
        const double a0 = accel(y, 2 * i);
        const double a1 = accel(y1, 2 * i + 2);
        auto hermite = [h](double s, double p0, double p1, double m0,
                           double m1) {
          const double s2 = s * s;
          const double s3 = s2 * s;
          return (2 * s3 - 3 * s2 + 1) * p0 + (s3 - 2 * s2 + s) * h * m0 +
                 (-2 * s3 + 3 * s2) * p1 + (s3 - s2) * h * m1;
        };
        double lo = 0.0;
        double hi = 1.0;
        for (int it = 0; it < 80; ++it) {
          const double mid = (lo + hi) / 2;
          (hermite(mid, v, v1, a0, a1) > 0.0 ? lo : hi) = mid;
        }
        const double s = (lo + hi) / 2;
        return {h * (static_cast<double>(i) + s), hermite(s, y, y1, v, v1)};
      }
      y = y1;
      v = v1;
    }
    throw OracleError("shooting trajectory has no stationary point");
  };

  double lo = 0.05;
  double hi = 8.0;
  if (shoot(lo).value >= 1.0 || shoot(hi).value <= 1.0) {
    throw OracleError("shooting bracket does not enclose the target");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = (lo + hi) / 2;
    (shoot(mid).value < 1.0 ? lo : hi) = mid;
  }
  return shoot((lo + hi) / 2).at;
}

double gamma_constant(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  double lo = kSqrt2;
  double hi = kHalfPi;
  while (hi - lo > tol) {
    const double mid = (lo + hi) / 2;
    (psi(1.0, mid) > mid ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

double semicycle_threshold(double tau_m) {
  require_delta(tau_m);
  return psi(1.0, tau_m) + theta(tau_m);
}

}  // namespace semicycle
