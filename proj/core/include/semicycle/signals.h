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

#ifndef SEMICYCLE_SIGNALS_H_
#define SEMICYCLE_SIGNALS_H_

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "semicycle/polynomial.h"

namespace semicycle {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Closed interval [lo, hi]; either end may be infinite.
struct Interval {
  double lo;
  double hi;
};

// One polynomial piece of a signal restricted to [lo, hi]. The polynomial is
// expressed in the local variable u = t - origin.
struct SignalPiece {
  double lo;
  double hi;
  double origin;
  Polynomial poly;

  double operator()(double t) const { return poly(t - origin); }
};

// A real function of time given by breakpoints b_0 < ... < b_m and one
// polynomial per [b_i, b_{i+1}), written in the local variable t - b_i.
// Below b_0 and from b_m on the signal takes constant extension values.
// Evaluation is right-continuous at breakpoints.
class PiecewiseSignal {
 public:
  PiecewiseSignal(std::vector<double> breakpoints,
                  std::vector<Polynomial> segments, double left, double right);

  // A single value everywhere.
  static PiecewiseSignal constant(double value);
  // Piecewise-constant signal: values[i] on [breakpoints[i], breakpoints[i+1]).
  static PiecewiseSignal piecewise_constant(std::vector<double> breakpoints,
                                            std::vector<double> values,
                                            double left, double right);

  double operator()(double t) const;
  double left_limit(double t) const;

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const Polynomial> segments() const { return segments_; }
  double left_extension() const { return left_; }
  double right_extension() const { return right_; }

  // Piece whose interior contains t (ties resolve to the right piece).
  SignalPiece piece_at(double t) const;
  // Pieces covering `interval`, clipped to it, in ascending order. Pieces of
  // zero length are dropped unless the interval itself is a single point.
  std::vector<SignalPiece> pieces(Interval interval) const;

  // Essential range over the interval (segment closures, measure-zero points
  // ignored).
  ValueRange range(Interval interval) const;

  // t -> f(k t), k > 0.
  PiecewiseSignal time_scaled(double k) const;
  // t -> c f(t).
  PiecewiseSignal value_scaled(double c) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<Polynomial> segments_;
  double left_;
  double right_;
};

double eval_signal(const PiecewiseSignal& sig, double t);

// Maximum of |sig| over the interval; throws DomainError if lo > hi.
double esssup_abs(const PiecewiseSignal& sig, Interval interval);

// Samples on a uniform grid over [lo, hi], linearly interpolated between
// nodes and extended by the boundary samples outside the domain.
class GridFunction {
 public:
  GridFunction(double lo, double hi, std::vector<double> values);

  double operator()(double t) const;

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double spacing() const { return spacing_; }
  std::size_t size() const { return values_.size(); }
  double node(std::size_t i) const { return lo_ + spacing_ * static_cast<double>(i); }
  std::span<const double> values() const { return values_; }

 private:
  double lo_;
  double hi_;
  double spacing_;
  std::vector<double> values_;
};

}  // namespace semicycle

#endif  // SEMICYCLE_SIGNALS_H_
