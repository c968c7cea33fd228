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

#ifndef SEMICYCLE_POLYNOMIAL_H_
#define SEMICYCLE_POLYNOMIAL_H_

#include <initializer_list>
#include <span>
#include <vector>

namespace semicycle {

// Dense real polynomial c0 + c1 u + c2 u^2 + ... in a local variable u.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);
  Polynomial(std::initializer_list<double> coefficients);

  static Polynomial constant(double value) { return Polynomial({value}); }

  double operator()(double u) const;

  // Degree after trimming trailing zeros; the zero polynomial reports 0.
  int degree() const;
  bool is_zero() const;
  std::span<const double> coefficients() const { return coefficients_; }

  Polynomial derivative() const;
  // Antiderivative vanishing at u = 0.
  Polynomial antiderivative() const;
  // q(u) = p(k u).
  Polynomial scaled_argument(double k) const;
  // q(u) = p(u + a).
  Polynomial shifted(double a) const;

  Polynomial& operator*=(double c);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double c, Polynomial p) { return p *= c; }

 private:
  void trim();
  std::vector<double> coefficients_;
};

struct ValueRange {
  double min;
  double max;
};

// Real roots of p in [lo, hi], ascending. Critical points of p split the
// interval into monotone pieces, each bisected to full double precision.
// The zero polynomial has no isolated roots and yields an empty result.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi);

// Exact range of p over [lo, hi] from endpoint and critical-point values.
ValueRange value_range(const Polynomial& p, double lo, double hi);

}  // namespace semicycle

#endif  // SEMICYCLE_POLYNOMIAL_H_
