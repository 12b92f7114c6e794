// Copyright 2026 The vortexlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "vortexlab/exact.hpp"

namespace vortexlab {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// e^{2 pi i t}.
inline std::complex<double> unit(double turns) {
  return std::polar(1.0, kTwoPi * turns);
}

/// A point of the circle R/Z, stored as a rational in [0, 1).
///
/// Angles built from exact fractions stay exact under addition and integer
/// multiples. Angles built from decimals or doubles are stored as the exact
/// value of that literal but tagged inexact, so outputs can say so.
class Angle {
 public:
  Angle() = default;

  static Angle exact(const Rational& r) { return Angle(frac(r), true); }
  static Angle exact(long num, long den) { return exact(Rational(num, den)); }
  static Angle from_double(double x) { return Angle(frac(vortexlab::from_double(x)), false); }
  static Angle from_decimal(std::string_view s) { return Angle(frac(parse_decimal(s)), false); }

  const Rational& value() const { return value_; }
  bool is_exact() const { return exact_; }
  double to_double() const { return vortexlab::to_double(value_); }

  /// n * angle mod 1, exactly.
  Angle times(const Integer& n) const { return Angle(frac(value_ * n), exact_); }
  Angle times(long n) const { return times(Integer(n)); }
  Angle operator+(const Angle& o) const { return Angle(frac(value_ + o.value_), exact_ && o.exact_); }
  Angle operator-(const Angle& o) const { return Angle(frac(value_ - o.value_), exact_ && o.exact_); }
  Angle operator-() const { return Angle(frac(-value_), exact_); }
  bool operator==(const Angle& o) const { return value_ == o.value_; }

  /// e^{2 pi i n angle}, with the multiple reduced exactly before rounding.
  std::complex<double> phase(long n = 1) const { return unit(times(n).to_double()); }

 private:
  Angle(Rational v, bool exact) : value_(std::move(v)), exact_(exact) {}

  Rational value_{0};
  bool exact_ = true;
};

/// Distance to the nearest integer, exactly.
inline Rational distance_to_integer(const Rational& r) {
  const Rational f = frac(r);
  return f <= Rational(1, 2) ? f : Rational(1 - f);
}

/// Reduce a double into [0, 1).
inline double wrap01(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

/// Circle distance between two points of R/Z given as doubles.
inline double circle_distance(double a, double b) {
  const double d = wrap01(a - b);
  return std::min(d, 1.0 - d);
}

}  // namespace vortexlab
