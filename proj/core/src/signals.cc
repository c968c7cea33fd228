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

#include "semicycle/signals.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "semicycle/errors.h"

namespace semicycle {

PiecewiseSignal::PiecewiseSignal(std::vector<double> breakpoints,
                                 std::vector<Polynomial> segments, double left,
                                 double right)
    : breakpoints_(std::move(breakpoints)),
      segments_(std::move(segments)),
      left_(left),
      right_(right) {
  if (breakpoints_.empty()) {
    throw DomainError("signal needs at least one breakpoint");
  }
  if (segments_.size() + 1 != breakpoints_.size()) {
    throw DomainError("signal segment count must be breakpoint count - 1");
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i])) {
      throw DomainError("signal breakpoints must be finite");
    }
    if (i > 0 && !(breakpoints_[i] > breakpoints_[i - 1])) {
      throw DomainError("signal breakpoints must be strictly increasing");
    }
  }
  if (!std::isfinite(left_) || !std::isfinite(right_)) {
    throw DomainError("signal extensions must be finite");
  }
}

PiecewiseSignal PiecewiseSignal::constant(double value) {
  return PiecewiseSignal({0.0}, {}, value, value);
}

PiecewiseSignal PiecewiseSignal::piecewise_constant(
    std::vector<double> breakpoints, std::vector<double> values, double left,
    double right) {
  std::vector<Polynomial> segments;
  segments.reserve(values.size());
  for (double v : values) segments.push_back(Polynomial::constant(v));
  return PiecewiseSignal(std::move(breakpoints), std::move(segments), left,
                         right);
}

double PiecewiseSignal::operator()(double t) const {
  if (t < breakpoints_.front()) return left_;
  if (t >= breakpoints_.back()) return right_;
  const auto it =
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return segments_[i](t - breakpoints_[i]);
}

double PiecewiseSignal::left_limit(double t) const {
  if (t <= breakpoints_.front()) return left_;
  if (t > breakpoints_.back()) return right_;
  const auto it =
      std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return segments_[i](t - breakpoints_[i]);
}

SignalPiece PiecewiseSignal::piece_at(double t) const {
  if (t < breakpoints_.front()) {
    return {-kInfinity, breakpoints_.front(), 0.0, Polynomial::constant(left_)};
  }
  if (t >= breakpoints_.back()) {
    return {breakpoints_.back(), kInfinity, 0.0, Polynomial::constant(right_)};
  }
  const auto it =
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return {breakpoints_[i], breakpoints_[i + 1], breakpoints_[i], segments_[i]};
}

std::vector<SignalPiece> PiecewiseSignal::pieces(Interval interval) const {
  std::vector<SignalPiece> out;
  const double lo = interval.lo;
  const double hi = interval.hi;
  if (lo > hi) return out;
  if (lo == hi) {
    SignalPiece piece = piece_at(lo);
    piece.lo = piece.hi = lo;
    out.push_back(std::move(piece));
    return out;
  }
  if (lo < breakpoints_.front()) {
    out.push_back({lo, std::min(hi, breakpoints_.front()), 0.0,
                   Polynomial::constant(left_)});
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const double a = std::max(lo, breakpoints_[i]);
    const double b = std::min(hi, breakpoints_[i + 1]);
    if (a < b) out.push_back({a, b, breakpoints_[i], segments_[i]});
  }
  if (hi > breakpoints_.back()) {
    out.push_back({std::max(lo, breakpoints_.back()), hi, 0.0,
                   Polynomial::constant(right_)});
  }
  return out;
}

ValueRange PiecewiseSignal::range(Interval interval) const {
  if (interval.lo > interval.hi) {
    throw DomainError("range over an empty interval");
  }
  ValueRange out{kInfinity, -kInfinity};
  for (const SignalPiece& piece : pieces(interval)) {
    ValueRange r;
    if (piece.poly.degree() == 0) {
      r.min = r.max = piece.poly(0.0);
    } else {
      r = value_range(piece.poly, piece.lo - piece.origin,
                      piece.hi - piece.origin);
    }
    out.min = std::min(out.min, r.min);
    out.max = std::max(out.max, r.max);
  }
  return out;
}

PiecewiseSignal PiecewiseSignal::time_scaled(double k) const {
  if (!(k > 0.0)) throw DomainError("time scale must be positive");
  std::vector<double> breakpoints(breakpoints_.size());
  std::transform(breakpoints_.begin(), breakpoints_.end(), breakpoints.begin(),
                 [k](double b) { return b / k; });
  std::vector<Polynomial> segments;
  segments.reserve(segments_.size());
  for (const Polynomial& p : segments_) segments.push_back(p.scaled_argument(k));
  return PiecewiseSignal(std::move(breakpoints), std::move(segments), left_,
                         right_);
}

PiecewiseSignal PiecewiseSignal::value_scaled(double c) const {
  std::vector<Polynomial> segments;
  segments.reserve(segments_.size());
  for (const Polynomial& p : segments_) segments.push_back(c * p);
  return PiecewiseSignal(breakpoints_, std::move(segments), c * left_,
                         c * right_);
}

double eval_signal(const PiecewiseSignal& sig, double t) { return sig(t); }

double esssup_abs(const PiecewiseSignal& sig, Interval interval) {
  if (interval.lo > interval.hi) {
    throw DomainError("esssup over an empty interval");
  }
  const ValueRange r = sig.range(interval);
  return std::max(std::abs(r.min), std::abs(r.max));
}

GridFunction::GridFunction(double lo, double hi, std::vector<double> values)
    : lo_(lo), hi_(hi), values_(std::move(values)) {
  if (values_.size() < 2) throw DomainError("grid needs at least two samples");
  if (!(hi > lo)) throw DomainError("grid domain must have positive length");
  spacing_ = (hi_ - lo_) / static_cast<double>(values_.size() - 1);
}

double GridFunction::operator()(double t) const {
  if (t <= lo_) return values_.front();
  if (t >= hi_) return values_.back();
  const double pos = (t - lo_) / spacing_;
  auto i = static_cast<std::size_t>(pos);
  if (i >= values_.size() - 1) i = values_.size() - 2;
  const double frac = pos - static_cast<double>(i);
  return values_[i] + frac * (values_[i + 1] - values_[i]);
}

}  // namespace semicycle
