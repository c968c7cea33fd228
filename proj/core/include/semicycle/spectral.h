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

#ifndef SEMICYCLE_SPECTRAL_H_
#define SEMICYCLE_SPECTRAL_H_

#include <complex>
#include <vector>

namespace semicycle {

using Complex = std::complex<double>;

// Branch `branch` of the Lambert W function: w e^w = z.
Complex lambert_w(int branch, Complex z);

// Index k with w = W_k(w e^w), from w + log w = log z + 2 pi i k.
int lambert_branch_of(Complex w);

struct CharRoot {
  int branch;
  // Sign of the Lambert argument: +1 for +i c/2 (or +c/2), -1 otherwise.
  int arg_sign;
  Complex lambda;
  // +1 for lambda^2 + e^{-c lambda} = 0, -1 for lambda^2 - e^{-c lambda} = 0.
  int sign;
  double residual;
};

// Roots lambda = 2 W_n(arg) / c of the characteristic equation of
// x''(t) + sign x(t - c) = 0, one per conjugate pair (Im lambda >= 0),
// for n in [first_branch, last_branch]. Each root is Newton-polished on the
// characteristic function.
std::vector<CharRoot> char_roots(double c, int sign, int first_branch,
                                 int last_branch);

// |lambda^2 + sign e^{-c lambda}|.
double char_residual(double c, int sign, Complex lambda);

// pi / |Im lambda|: half-period of the eigensolution.
double eigen_semicycle(const CharRoot& root);

}  // namespace semicycle

#endif  // SEMICYCLE_SPECTRAL_H_
