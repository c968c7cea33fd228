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

#include "semicycle/polynomial.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace semicycle {

Polynomial::Polynomial(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<double> coefficients)
    : coefficients_(coefficients) {
  trim();
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0.0) {
    coefficients_.pop_back();
  }
}

double Polynomial::operator()(double u) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * u + *it;
  }
  return acc;
}

int Polynomial::degree() const {
  return coefficients_.empty() ? 0 : static_cast<int>(coefficients_.size()) - 1;
}

bool Polynomial::is_zero() const { return coefficients_.empty(); }

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() <= 1) return Polynomial();
  std::vector<double> out(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    out[i - 1] = static_cast<double>(i) * coefficients_[i];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  if (coefficients_.empty()) return Polynomial();
  std::vector<double> out(coefficients_.size() + 1, 0.0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    out[i + 1] = coefficients_[i] / static_cast<double>(i + 1);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled_argument(double k) const {
  std::vector<double> out(coefficients_);
  double power = 1.0;
  for (double& c : out) {
    c *= power;
    power *= k;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(double a) const {
  // Repeated synthetic division (Taylor shift).
  std::vector<double> c(coefficients_);
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      c[j - 1] += a * c[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator*=(double c) {
  for (double& x : coefficients_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<double> out(a.coefficients_.size() + b.coefficients_.size() - 1,
                          0.0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> out(
      std::max(a.coefficients_.size(), b.coefficients_.size()), 0.0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    out[i] += a.coefficients_[i];
  }
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) {
    out[i] += b.coefficients_[i];
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-1.0) * b;
}

namespace {

// Root of a function known to be monotone on [lo, hi] with a sign change.
double bisect_monotone(const Polynomial& p, double lo, double hi, double flo) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = p(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> real_roots(const Polynomial& p, double lo, double hi) {
  std::vector<double> roots;
  if (p.is_zero() || p.degree() == 0 || !(lo <= hi)) return roots;
  const auto c = p.coefficients();
  if (p.degree() == 1) {
    const double r = -c[0] / c[1];
    if (r >= lo && r <= hi) roots.push_back(r);
    return roots;
  }
  std::vector<double> points{lo};
  for (double x : real_roots(p.derivative(), lo, hi)) {
    if (x > points.back()) points.push_back(x);
  }
  if (hi > points.back()) points.push_back(hi);

  for (std::size_t i = 0; i < points.size(); ++i) {
    const double fa = p(points[i]);
    if (fa == 0.0) {
      if (roots.empty() || roots.back() != points[i]) roots.push_back(points[i]);
      continue;
    }
    if (i + 1 == points.size()) break;
    const double fb = p(points[i + 1]);
    if (fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      roots.push_back(bisect_monotone(p, points[i], points[i + 1], fa));
    }
  }
  return roots;
}

ValueRange value_range(const Polynomial& p, double lo, double hi) {
  double vmin = std::min(p(lo), p(hi));
  double vmax = std::max(p(lo), p(hi));
  if (p.degree() >= 2) {
    for (double x : real_roots(p.derivative(), lo, hi)) {
      const double v = p(x);
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
    }
  }
  return {vmin, vmax};
}

}  // namespace semicycle
