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

#include "semicycle/spectral.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "semicycle/errors.h"

namespace semicycle {
namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kInvE = 1.0 / std::numbers::e;
const Complex kI(0.0, 1.0);

Complex initial_guess(int branch, Complex z) {
  if (branch == 0 && std::abs(z) < 0.25) {
    return z - z * z + 1.5 * z * z * z;
  }
  if (branch >= -1 && branch <= 1 && std::abs(z + kInvE) < 0.3) {
    Complex p = std::sqrt(2.0 * (std::numbers::e * z + 1.0));
    // W_0 takes the principal root; W_{-1} below the cut and W_1 above it
    // take the other one.
    if (branch == -1 && z.imag() <= 0.0) p = -p;
    if (branch == 1 && z.imag() > 0.0) p = -p;
    if (branch == 0 || (branch == -1 && z.imag() <= 0.0) ||
        (branch == 1 && z.imag() > 0.0)) {
      return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    }
  }
  const Complex l1 = std::log(z) + kTwoPi * kI * static_cast<double>(branch);
  return l1 - std::log(l1);
}

Complex halley(Complex w, Complex z) {
  for (int it = 0; it < 100; ++it) {
    const Complex ew = std::exp(w);
    const Complex f = w * ew - z;
    const Complex wp1 = w + 1.0;
    const Complex denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const Complex step = f / denom;
    w -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) return w;
  }
  return w;
}

}  // namespace

Complex lambert_w(int branch, Complex z) {
  if (z == Complex(0.0, 0.0)) {
    if (branch == 0) return 0.0;
    throw DomainError("W_k(0) is singular for k != 0");
  }
  if (branch == 0 && std::abs(z + kInvE) < 1e-15) return -1.0;
  // Points on the cut belong to its upper side, including a signed zero.
  if (z.imag() == 0.0) z.imag(0.0);
  // The first guess that lands on the requested branch wins; log(1 + z)
  // covers the principal branch between the series and asymptotic regions.
  const Complex l1 = std::log(z) + kTwoPi * kI * static_cast<double>(branch);
  std::vector<Complex> guesses{initial_guess(branch, z), l1 - std::log(l1)};
  if (branch == 0) guesses.push_back(std::log(1.0 + z));
  Complex w = std::numeric_limits<double>::quiet_NaN();
  for (const Complex& guess : guesses) {
    const Complex candidate = halley(guess, z);
    if (std::isfinite(std::abs(candidate)) && lambert_branch_of(candidate) == branch) {
      w = candidate;
      break;
    }
  }
  const double residual = std::abs(w * std::exp(w) - z);
  if (!(residual < 1e-13 * std::max(1.0, std::abs(z)))) {  // also catches NaN
    throw ConvergenceError("Lambert W iteration did not converge");
  }
  return w;
}

int lambert_branch_of(Complex w) {
  if (w == Complex(0.0, 0.0)) return 0;
  const Complex z = w * std::exp(w);
  Complex log_z = std::log(z);
  if (z.real() < 0.0 && std::abs(z.imag()) <= 1e-14 * std::abs(z)) {
    // On the cut: the upper side, and W_{-1} owns the real values below -1.
    if (std::abs(w.imag()) <= 1e-14 * std::abs(w)) return w.real() < -1.0 ? -1 : 0;
    log_z = Complex(log_z.real(), std::numbers::pi);
  }
  const double k = (w + std::log(w) - log_z).imag() / kTwoPi;
  return static_cast<int>(std::lround(k));
}

double char_residual(double c, int sign, Complex lambda) {
  return std::abs(lambda * lambda + static_cast<double>(sign) *
                                        std::exp(-c * lambda));
}

std::vector<CharRoot> char_roots(double c, int sign, int first_branch,
                                 int last_branch) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("delay must be positive");
  }
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (first_branch > last_branch) throw DomainError("empty branch range");
  const double s = static_cast<double>(sign);
  const Complex base = sign > 0 ? Complex(0.0, c / 2) : Complex(c / 2, 0.0);
  std::vector<CharRoot> out;
  for (int n = first_branch; n <= last_branch; ++n) {
    for (int arg_sign : {1, -1}) {
      Complex lambda = 2.0 * lambert_w(n, static_cast<double>(arg_sign) * base) / c;
      for (int it = 0; it < 8; ++it) {
        const Complex e = std::exp(-c * lambda);
        const Complex g = lambda * lambda + s * e;
        const Complex dg = 2.0 * lambda - s * c * e;
        const Complex step = g / dg;
        lambda -= step;
        if (std::abs(step) <= 1e-16 * std::abs(lambda)) break;
      }
      if (lambda.imag() < 0.0) lambda = std::conj(lambda);
      if (std::abs(lambda.imag()) < 1e-14) lambda.imag(0.0);
      const bool seen = std::any_of(out.begin(), out.end(), [&](const CharRoot& r) {
        return std::abs(r.lambda - lambda) <= 1e-8 * (1.0 + std::abs(lambda));
      });
      if (seen) continue;
      out.push_back({n, arg_sign, lambda, sign, char_residual(c, sign, lambda)});
    }
  }
  return out;
}

double eigen_semicycle(const CharRoot& root) {
  if (root.lambda.imag() == 0.0) {
    throw NotApplicableError("real root: the eigensolution does not oscillate");
  }
  return std::numbers::pi / std::abs(root.lambda.imag());
}

}  // namespace semicycle
