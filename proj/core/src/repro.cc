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

#include "semicycle/repro.h"

#include <cmath>
#include <numbers>

#include "semicycle/errors.h"

namespace semicycle {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

void require_epsilon(double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be finite and nonnegative");
  }
}

double alternating(long n) { return n % 2 == 0 ? 1.0 : -1.0; }

double example2_growth(double epsilon) {
  return std::hypot(std::sinh(epsilon), std::cosh(epsilon));
}

// sin(b + u) as a degree-16 Taylor polynomial in u.
Polynomial sin_taylor(double b) {
  std::vector<double> c(17);
  double fact = 1.0;
  for (int k = 0; k <= 16; ++k) {
    if (k > 0) fact *= k;
    // k-th derivative of sin at b.
    const double d = (k % 4 == 0)   ? std::sin(b)
                     : (k % 4 == 1) ? std::cos(b)
                     : (k % 4 == 2) ? -std::sin(b)
                                    : -std::cos(b);
    c[static_cast<std::size_t>(k)] = d / fact;
  }
  return Polynomial(std::move(c));
}

}  // namespace

Example parse_example(const std::string& name) {
  if (name == "example2") return Example::kExample2;
  if (name == "example3") return Example::kExample3;
  if (name == "sin" || name == "sin_pi") return Example::kSinPi;
  throw DomainError("unknown example: " + name);
}

std::string to_string(Example which) {
  switch (which) {
    case Example::kExample2:
      return "example2";
    case Example::kExample3:
      return "example3";
    case Example::kSinPi:
      return "sin";
  }
  return "sin";
}

double example2_period(double epsilon) {
  require_epsilon(epsilon);
  return kPi + epsilon - std::atan(std::tanh(epsilon));
}

double example3_period(double epsilon) {
  require_epsilon(epsilon);
  return 2 * kSqrt2 + 2 * epsilon;
}

double block_length(const ExampleSpec& spec) {
  switch (spec.which) {
    case Example::kExample2:
      return example2_period(spec.epsilon);
    case Example::kExample3:
      return example3_period(spec.epsilon);
    case Example::kSinPi:
      return kPi;
  }
  return kPi;
}

double example_horizon(const ExampleSpec& spec) {
  return spec.periods * block_length(spec);
}

double example2_closed_form(double epsilon, double t) {
  const double a = example2_period(epsilon);
  const double r = example2_growth(epsilon);
  const auto n = static_cast<long>(std::floor(t / a));
  const double u = t - n * a;
  if (u <= epsilon) return std::pow(-r, n) * std::sinh(u);
  return alternating(n) * std::pow(r, n + 1) *
         std::sin(u - epsilon + std::atan(std::tanh(epsilon)));
}

double example2_closed_form_slope(double epsilon, double t) {
  const double a = example2_period(epsilon);
  const double r = example2_growth(epsilon);
  const auto n = static_cast<long>(std::floor(t / a));
  const double u = t - n * a;
  if (u <= epsilon) return std::pow(-r, n) * std::cosh(u);
  return alternating(n) * std::pow(r, n + 1) *
         std::cos(u - epsilon + std::atan(std::tanh(epsilon)));
}

namespace {

struct Example3Local {
  double scale;
  int piece;
  double u;
};

Example3Local example3_locate(double epsilon, double t) {
  const double b = example3_period(epsilon);
  const auto n = static_cast<long>(std::floor(t / b));
  const double scale = alternating(n) * std::pow(1 + epsilon * epsilon, n);
  const double u = t - n * b;
  if (u <= kSqrt2) return {scale, 0, u};
  if (u <= kSqrt2 + epsilon) return {scale, 1, u - kSqrt2};
  if (u <= kSqrt2 + 2 * epsilon) return {scale, 2, u - kSqrt2 - epsilon};
  return {scale, 3, u - kSqrt2 - 2 * epsilon};
}

}  // namespace

double example3_closed_form(double epsilon, double t) {
  require_epsilon(epsilon);
  const Example3Local l = example3_locate(epsilon, t);
  const double e2 = epsilon * epsilon;
  switch (l.piece) {
    case 0:
      return l.scale * (1 - 0.5 * (kSqrt2 - l.u) * (kSqrt2 - l.u));
    case 1:
      return l.scale * (1 + 0.5 * l.u * l.u);
    case 2:
      return l.scale * (1 + 0.5 * e2 - 0.5 * l.u * l.u + epsilon * l.u);
    default:
      return l.scale * (1 + e2) * (1 - 0.5 * l.u * l.u);
  }
}

double example3_closed_form_slope(double epsilon, double t) {
  require_epsilon(epsilon);
  const Example3Local l = example3_locate(epsilon, t);
  switch (l.piece) {
    case 0:
      return l.scale * (kSqrt2 - l.u);
    case 1:
      return l.scale * l.u;
    case 2:
      return l.scale * (epsilon - l.u);
    default:
      return -l.scale * (1 + epsilon * epsilon) * l.u;
  }
}

double closed_form(const ExampleSpec& spec, double t) {
  switch (spec.which) {
    case Example::kExample2:
      return example2_closed_form(spec.epsilon, t);
    case Example::kExample3:
      return example3_closed_form(spec.epsilon, t);
    case Example::kSinPi:
      return std::sin(t);
  }
  return 0.0;
}

double closed_form_slope(const ExampleSpec& spec, double t) {
  switch (spec.which) {
    case Example::kExample2:
      return example2_closed_form_slope(spec.epsilon, t);
    case Example::kExample3:
      return example3_closed_form_slope(spec.epsilon, t);
    case Example::kSinPi:
      return std::cos(t);
  }
  return 0.0;
}

std::vector<double> closed_form_junctions(const ExampleSpec& spec) {
  const double block = block_length(spec);
  std::vector<double> offsets;
  switch (spec.which) {
    case Example::kExample2:
      offsets = {0.0, spec.epsilon};
      break;
    case Example::kExample3:
      offsets = {0.0, kSqrt2, kSqrt2 + spec.epsilon, kSqrt2 + 2 * spec.epsilon};
      break;
    case Example::kSinPi:
      offsets = {0.0};
      break;
  }
  std::vector<double> out;
  for (int n = 0; n <= spec.periods; ++n) {
    for (double off : offsets) {
      const double t = n * block + off;
      if (t > example_horizon(spec)) break;
      if (out.empty() || t > out.back()) out.push_back(t);
    }
  }
  return out;
}

DelayProblem build_example_problem(const ExampleSpec& spec) {
  require_epsilon(spec.epsilon);
  if (spec.periods < 1) throw DomainError("periods must be at least 1");
  const double eps = spec.epsilon;
  const int periods = spec.periods;
  switch (spec.which) {
    case Example::kExample2: {
      const double a = example2_period(eps);
      std::vector<double> bp;
      std::vector<double> values;
      for (int n = 0; n < periods; ++n) {
        if (eps > 0.0) {
          bp.push_back(n * a);
          values.push_back(-1.0);
        }
        bp.push_back(n * a + eps);
        values.push_back(1.0);
      }
      bp.push_back(periods * a);
      return {PiecewiseSignal::piecewise_constant(bp, values, values.front(),
                                                  1.0),
              PiecewiseSignal::constant(0.0),
              0.0,
              PiecewiseSignal::constant(0.0),
              0.0,
              1.0,
              0.0};
    }
    case Example::kExample3: {
      const double b = example3_period(eps);
      std::vector<double> p_bp;
      std::vector<double> p_val;
      std::vector<double> tau_bp;
      std::vector<Polynomial> tau_seg;
      for (int n = 0; n < periods; ++n) {
        const double t0 = n * b;
        p_bp.insert(p_bp.end(), {t0, t0 + kSqrt2 + eps});
        p_val.insert(p_val.end(), {-1.0, 1.0});
        tau_bp.push_back(t0);
        tau_seg.push_back(Polynomial({kSqrt2, 1.0}));
        tau_bp.push_back(t0 + kSqrt2);
        tau_seg.push_back(Polynomial({0.0, 1.0}));
        if (eps > 0.0) {
          tau_bp.push_back(t0 + kSqrt2 + 2 * eps);
          tau_seg.push_back(Polynomial({0.0, 1.0}));
        }
      }
      const double end = periods * b;
      p_bp.push_back(end);
      tau_bp.push_back(end);
      const double tau_end = b - kSqrt2 - 2 * eps;
      // The n = -1 arch: y(-sqrt2) = -1, y(0) = 0, y'(0) = sqrt2.
      PiecewiseSignal history({-kSqrt2, 0.0}, {Polynomial({-1.0, 0.0, 0.5})},
                              -1.0, 0.0);
      return {PiecewiseSignal::piecewise_constant(p_bp, p_val, 1.0, 1.0),
              PiecewiseSignal(tau_bp, tau_seg, kSqrt2, tau_end),
              0.0,
              std::move(history),
              0.0,
              kSqrt2,
              {}};
    }
    case Example::kSinPi: {
      std::vector<double> bp;
      std::vector<Polynomial> seg;
      constexpr int kPieces = 8;
      for (int i = 0; i < kPieces; ++i) {
        const double b0 = -kPi + kPi * i / kPieces;
        bp.push_back(b0);
        seg.push_back(sin_taylor(b0));
      }
      bp.push_back(0.0);
      return {PiecewiseSignal::constant(-1.0),
              PiecewiseSignal::constant(kPi),
              0.0,
              PiecewiseSignal(bp, seg, 0.0, 0.0),
              0.0,
              1.0,
              {}};
    }
  }
  throw DomainError("unknown example");
}

double ArchConstruction::closed_form(double t) const {
  const double len = block();
  const auto n = static_cast<long>(std::floor(t / len));
  const double peak = alternating(n) * std::pow(ratio, n);
  const double u = t - n * len;
  if (u <= rise) {
    const double s = 1 - u / rise;
    return peak * (1 - s * s);
  }
  const double s = (u - rise) / fall;
  return peak * (1 - s * s);
}

ArchConstruction build_contracting_arches(double rise, double fall,
                                          int blocks) {
  if (!(rise > 0.0) || !(fall > 0.0)) {
    throw DomainError("rise and fall must be positive");
  }
  if (blocks < 1) throw DomainError("blocks must be at least 1");
  const double q = rise / fall;
  auto minimal_k = [q](double len, int k_min) {
    for (int k = k_min; k <= 200; ++k) {
      if (2 * std::pow(q, k) / (len * len) <= 1.0) return k;
    }
    throw DomainError("no delay index keeps |p| <= 1");
  };
  const int k_rise = minimal_k(rise, 1);
  const int k_fall = minimal_k(fall, 0);
  const double p_rise =
      alternating(k_rise) * 2 * std::pow(q, k_rise) / (rise * rise);
  const double p_fall =
      alternating(k_fall) * 2 * std::pow(q, k_fall) / (fall * fall);
  const double len = rise + fall;
  const double tau_m = std::max(k_rise * len, k_fall * len + fall);

  std::vector<double> p_bp;
  std::vector<double> p_val;
  std::vector<double> tau_bp;
  std::vector<Polynomial> tau_seg;
  for (int n = 0; n < blocks; ++n) {
    p_bp.insert(p_bp.end(), {n * len, n * len + rise});
    p_val.insert(p_val.end(), {p_rise, p_fall});
    tau_bp.insert(tau_bp.end(), {n * len, n * len + rise});
    tau_seg.push_back(Polynomial({k_rise * len - rise, 1.0}));
    tau_seg.push_back(Polynomial({k_fall * len, 1.0}));
  }
  p_bp.push_back(blocks * len);
  tau_bp.push_back(blocks * len);

  std::vector<double> h_bp;
  std::vector<Polynomial> h_seg;
  const int first = -static_cast<int>(std::ceil(tau_m / len)) - 1;
  for (int n = first; n < 0; ++n) {
    const double peak = alternating(n) * std::pow(q, n);
    h_bp.insert(h_bp.end(), {n * len, n * len + rise});
    h_seg.push_back(
        Polynomial({0.0, 2 * peak / rise, -peak / (rise * rise)}));
    h_seg.push_back(Polynomial({peak, 0.0, -peak / (fall * fall)}));
  }
  h_bp.push_back(0.0);

  DelayProblem problem{
      PiecewiseSignal::piecewise_constant(p_bp, p_val, p_fall, p_fall),
      PiecewiseSignal(tau_bp, tau_seg, k_fall * len + fall,
                      k_fall * len + fall),
      0.0,
      PiecewiseSignal(h_bp, h_seg, 0.0, 0.0),
      0.0,
      2.0 / rise,
      {}};
  return {rise,   fall,   q,     k_rise, k_fall,
          p_rise, p_fall, tau_m, blocks, std::move(problem)};
}

}  // namespace semicycle
