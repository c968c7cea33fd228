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

#include "semicycle/harness.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "semicycle/thresholds.h"

namespace semicycle {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Breakpoints 0 = b_0 < ... covering [0, horizon] with random gaps.
std::vector<double> random_breakpoints(std::mt19937_64& rng, double horizon,
                                       double min_gap, double max_gap) {
  std::vector<double> bp{0.0};
  while (bp.back() < horizon) bp.push_back(bp.back() + uniform(rng, min_gap, max_gap));
  return bp;
}

// Chebyshev series sum c_k T_k(xi) as a polynomial in u = t - lo on
// [lo, lo + len], xi = -1 + 2 u / len.
Polynomial chebyshev_poly(const std::vector<double>& c, double len) {
  const Polynomial xi({-1.0, 2.0 / len});
  Polynomial prev({1.0});
  Polynomial cur = xi;
  Polynomial sum = c[0] * prev;
  for (std::size_t k = 1; k < c.size(); ++k) {
    sum = sum + c[k] * cur;
    Polynomial next = Polynomial({0.0, 4.0 / len}) * cur - prev;
    next = next + Polynomial({-2.0}) * cur;
    prev = cur;
    cur = next;
  }
  return sum;
}

}  // namespace

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{splitmix64(seed), splitmix64(seed ^ splitmix64(index + 1))};
  return std::mt19937_64(seq);
}

DelayProblem random_normalized_problem(std::mt19937_64& rng, double horizon) {
  std::vector<double> p_bp = random_breakpoints(rng, horizon, 0.4, 3.0);
  std::vector<double> p_val(p_bp.size() - 1);
  for (double& v : p_val) v = uniform(rng, -0.3, 1.0);
  p_val[std::uniform_int_distribution<std::size_t>(0, p_val.size() - 1)(rng)] = 1.0;
  const double tau_bound = uniform(rng, 0.0, 3.0);
  std::vector<double> tau_bp = random_breakpoints(rng, horizon, 0.4, 3.0);
  std::vector<double> tau_val(tau_bp.size() - 1);
  for (double& v : tau_val) v = uniform(rng, 0.0, tau_bound);
  const double tau_m = *std::max_element(tau_val.begin(), tau_val.end());

  const double len = std::max(tau_m, 1e-3);
  std::vector<double> c(4);
  for (double& v : c) v = uniform(rng, -1.0, 1.0);
  const Polynomial hist = chebyshev_poly(c, len);
  const double value = hist(len);
  const double slope = hist.derivative()(len);
  return {PiecewiseSignal::piecewise_constant(p_bp, p_val, p_val.front(),
                                              p_val.back()),
          PiecewiseSignal::piecewise_constant(tau_bp, tau_val, tau_val.front(),
                                              tau_val.back()),
          0.0,
          PiecewiseSignal({-len, 0.0}, {hist}, hist(0.0), value),
          value,
          slope,
          {}};
}

std::vector<MarginRecord> margin_checks(const DelayProblem& problem,
                                        double horizon, double step) {
  const Trajectory traj = integrate(problem, horizon, step);
  const double tau_m = tau_max(problem, horizon);
  const std::vector<Semicycle> scs = semicycles(traj, find_zeros(traj));
  std::vector<MarginRecord> out;
  for (std::size_t i = 0; i < scs.size(); ++i) {
    const Semicycle& sc = scs[i];
    const BoundCheck descent = check_descent(traj, sc, tau_m);
    BoundCheck ascent{false, false, std::nan("")};
    const double th = theta(tau_m);
    if (sc.a - th >= traj.start() &&
        sc.a - tau_m - th >= traj.history_start()) {
      ascent = check_ascent(traj, sc, tau_m, ascent_rho(traj, sc, tau_m));
    }
    out.push_back({static_cast<int>(i), descent, ascent});
  }
  return out;
}

ComparisonPair random_comparison_pair(std::mt19937_64& rng, double horizon) {
  const std::vector<double> bp = random_breakpoints(rng, horizon, 0.3, 1.5);
  const std::size_t n = bp.size() - 1;
  std::vector<double> p(n);
  std::vector<double> tau(n);
  std::vector<double> big_p(n);
  std::vector<double> big_t(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = uniform(rng, -1.0, 1.0);
    tau[i] = uniform(rng, 0.0, 1.5);
    big_p[i] = std::abs(p[i]) + uniform(rng, 0.0, 0.3);
    big_t[i] = tau[i] + uniform(rng, 0.0, 0.3);
  }
  const double t_m = *std::max_element(big_t.begin(), big_t.end());
  const double tau_m = *std::max_element(tau.begin(), tau.end());

  // y(t) = 1 - alpha t on [-T_m, 0]: positive, nonincreasing.
  const double alpha = uniform(rng, 0.0, 0.5);
  const Polynomial y_hist({1.0 + alpha * t_m, -alpha});
  // z = sign * y * g with g = (1 + sum c_k T_k) / (1 + sum c_k), c_k >= 0,
  // so |g| <= 1 and g(0) = 1.
  std::vector<double> c(4);
  double total = 1.0;
  c[0] = 1.0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    c[k] = uniform(rng, 0.0, 1.0);
    total += c[k];
  }
  for (double& v : c) v /= total;
  const double zsign = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
  const Polynomial g = chebyshev_poly(c, t_m);
  const Polynomial z_hist = zsign * (y_hist * g);
  const double z_slope = z_hist.derivative()(t_m);

  return {{PiecewiseSignal::piecewise_constant(bp, p, p.front(), p.back()),
           PiecewiseSignal::piecewise_constant(bp, tau, tau.front(), tau.back()),
           0.0,
           PiecewiseSignal({-t_m, 0.0}, {z_hist}, z_hist(0.0), zsign),
           zsign,
           z_slope,
           -tau_m},
          {PiecewiseSignal::piecewise_constant(bp, big_p, big_p.front(),
                                               big_p.back()),
           PiecewiseSignal::piecewise_constant(bp, big_t, big_t.front(),
                                               big_t.back()),
           0.0,
           PiecewiseSignal({-t_m, 0.0}, {y_hist}, y_hist(0.0), 1.0),
           1.0,
           -alpha,
           -t_m}};
}

DelayProblem random_negative_problem(std::mt19937_64& rng, double horizon) {
  std::vector<double> p_bp = random_breakpoints(rng, horizon, 0.5, 4.0);
  std::vector<double> p_val(p_bp.size() - 1);
  for (double& v : p_val) v = -uniform(rng, 0.0, 1.0);
  std::vector<double> tau_bp = random_breakpoints(rng, horizon, 0.5, 4.0);
  std::vector<double> tau_val(tau_bp.size() - 1);
  for (double& v : tau_val) v = uniform(rng, 0.0, 1.0);
  const double m = -*std::min_element(p_val.begin(), p_val.end());
  const double tau_m = *std::max_element(tau_val.begin(), tau_val.end());
  const double target = 2.0 / std::numbers::e * uniform(rng, 0.3, 1.0);
  const double scale = m > 0.0 && tau_m > 0.0 ? target / (tau_m * std::sqrt(m)) : 1.0;
  for (double& v : tau_val) v *= scale;
  return {PiecewiseSignal::piecewise_constant(p_bp, p_val, p_val.front(),
                                              p_val.back()),
          PiecewiseSignal::piecewise_constant(tau_bp, tau_val, tau_val.front(),
                                              tau_val.back()),
          0.0,
          PiecewiseSignal::constant(0.0),
          0.0,
          0.0,
          {}};
}

ArchConstruction random_arches(std::mt19937_64& rng, int windows) {
  const double len = uniform(rng, 1.5, 2.7);
  const double q = uniform(rng, 0.6, 0.92);
  const double rise = q * len / (1 + q);
  const double fall = len / (1 + q);
  const ArchConstruction probe = build_contracting_arches(rise, fall, 1);
  const double m = std::max(std::abs(probe.p_rise), std::abs(probe.p_fall));
  const double k = 1.0 / std::sqrt(m);
  const double spacing = probe.tau_m + k * theta(probe.tau_m / k);
  const int blocks =
      static_cast<int>(std::ceil((windows + 0.5) * (spacing + len) / len)) + 2;
  return build_contracting_arches(rise, fall, blocks);
}

}  // namespace semicycle
