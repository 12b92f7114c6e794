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

// Exact integer and rational arithmetic helpers.
//
// Everything the construction asserts as an inequality goes through these
// types: arbitrary precision integers, rationals in lowest terms, and
// certified rational enclosures of real k-th roots.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vortexlab/errors.hpp"

namespace vortexlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

/// Floor division for a positive divisor.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Non-negative residue of a modulo m (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Integer floor(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

inline Integer ceil(const Rational& r) { return -floor(-r); }

/// Fractional part, in [0, 1).
inline Rational frac(const Rational& r) { return r - Rational(floor(r)); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Integer& i) { return i.convert_to<double>(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Integer pow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1u) out *= b;
    b *= b;
    exponent >>= 1u;
  }
  return out;
}

/// Rational 2^e for any sign of e.
inline Rational pow2(int e) {
  Integer p = Integer(1) << std::abs(e);
  return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

/// floor(n^(1/k)) for n >= 0, k >= 1.
inline Integer iroot(const Integer& n, unsigned k) {
  if (n < 0) throw InputError("iroot of a negative integer");
  if (k == 0) throw InputError("iroot with k = 0");
  if (n < 2 || k == 1) return n;
  // Newton from an upper bound 2^ceil(bits/k).
  const auto bits = boost::multiprecision::msb(n) + 1;
  Integer x = Integer(1) << ((bits + k - 1) / k);
  while (true) {
    Integer y = ((k - 1) * x + n / pow(x, k - 1)) / k;
    if (y >= x) break;
    x = y;
  }
  while (pow(x, k) > n) --x;
  while (pow(x + 1, k) <= n) ++x;
  return x;
}

inline Integer isqrt(const Integer& n) { return iroot(n, 2); }
inline Integer icbrt(const Integer& n) { return iroot(n, 3); }

/// Inverse of a modulo m, in {0, ..., m-1}; nullopt when gcd(a, m) != 1.
inline std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
  if (m <= 0) throw InputError("mod_inverse: modulus must be positive");
  Integer old_r = mod_floor(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer quotient = old_r / r;
    Integer tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, m);
}

/// Closed rational interval [lo, hi] enclosing an irrational quantity.
struct Enclosure {
  Rational lo;
  Rational hi;

  static Enclosure exact(const Rational& v) { return {v, v}; }
  double approx() const { return to_double((lo + hi) / 2); }

  Enclosure operator+(const Enclosure& o) const { return {lo + o.lo, hi + o.hi}; }
  Enclosure operator-(const Enclosure& o) const { return {lo - o.hi, hi - o.lo}; }
  /// Product of two enclosures of non-negative quantities.
  Enclosure times_nonneg(const Enclosure& o) const { return {lo * o.lo, hi * o.hi}; }
  Enclosure scaled(const Rational& c) const {
    return c >= 0 ? Enclosure{lo * c, hi * c} : Enclosure{hi * c, lo * c};
  }
};

/// Certified enclosure of n^(a/b) for n >= 0, with 2^-bits resolution.
inline Enclosure root_enclosure(const Integer& n, unsigned a, unsigned b,
                                unsigned bits = 96) {
  const Integer scaled = pow(n, a) << (bits * b);
  const Integer r = iroot(scaled, b);
  const Integer one = Integer(1) << bits;
  Rational lo(r, one);
  Rational hi(r + (pow(r, b) == scaled ? 0 : 1), one);
  return {lo, hi};
}

/// 2*pi enclosed by decimal truncations of pi.
inline Enclosure two_pi() {
  static const Integer scale = pow(Integer(10), 30);
  static const Integer digits("3141592653589793238462643383279");
  return {Rational(2 * digits, scale), Rational(2 * (digits + 1), scale)};
}

/// Exact value of a decimal literal such as "-0.4142135623730950488".
inline Rational parse_decimal(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty decimal string");
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  Integer mantissa = 0;
  int frac_digits = 0;
  bool seen_point = false, seen_digit = false;
  long exponent = 0;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) ++frac_digits;
      seen_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      try {
        std::size_t used = 0;
        exponent = std::stol(s.substr(pos + 1), &used);
        if (pos + 1 + used != s.size()) throw InputError("bad exponent");
      } catch (const std::logic_error&) {
        throw InputError("malformed decimal: " + s);
      }
      pos = s.size();
      break;
    } else {
      throw InputError("malformed decimal: " + s);
    }
  }
  if (!seen_digit) throw InputError("malformed decimal: " + s);
  const long shift = exponent - frac_digits;
  if (std::labs(shift) > 4000) throw InputError("decimal exponent out of range: " + s);
  Rational value = shift >= 0 ? Rational(mantissa * pow(Integer(10), unsigned(shift)))
                              : Rational(mantissa, pow(Integer(10), unsigned(-shift)));
  return negative ? Rational(-value) : value;
}

/// Exact rational value of a finite double.
inline Rational from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite value");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  return Rational(scaled) * pow2(exp - 53);
}

/// The first `count` continued-fraction convergents of x (fewer when the
/// expansion terminates).
inline std::vector<Rational> convergents(const Rational& x, std::size_t count) {
  std::vector<Rational> out;
  Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  Rational rest = x;
  while (out.size() < count) {
    const Integer a = floor(rest);
    const Integer h = a * h_prev + h_prev2, k = a * k_prev + k_prev2;
    out.emplace_back(h, k);
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const Rational f = rest - Rational(a);
    if (f == 0) break;
    rest = 1 / f;
  }
  return out;
}

}  // namespace vortexlab
