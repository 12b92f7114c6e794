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

// Finite Fourier data on the circle and on the 2-torus.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include "vortexlab/angle.hpp"

namespace vortexlab {

using Complex = std::complex<double>;

/// x -> sum_n c_n e^{2 pi i n x}, with finitely many distinct frequencies.
class TrigPolynomial {
 public:
  using Terms = std::map<long, Complex>;

  TrigPolynomial() = default;
  explicit TrigPolynomial(Terms terms) : terms_(std::move(terms)) { prune(); }

  static TrigPolynomial constant(Complex c) { return TrigPolynomial({{0, c}}); }
  static TrigPolynomial monomial(long n, Complex c = 1.0) { return TrigPolynomial({{n, c}}); }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Complex coefficient(long n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? Complex{} : it->second;
  }

  /// Largest |n| in the support (0 when empty).
  long degree() const {
    if (terms_.empty()) return 0;
    return std::max(std::labs(terms_.begin()->first), std::labs(terms_.rbegin()->first));
  }

  Complex operator()(double x) const {
    if (terms_.empty()) return {};
    const long lo = terms_.begin()->first;
    const long hi = terms_.rbegin()->first;
    Complex sum{};
    if (hi - lo <= static_cast<long>(4 * terms_.size() + 8)) {
      // Dense support: walk powers of e^{2 pi i x}.
      const Complex w = unit(x);
      Complex power = unit(wrap01(static_cast<double>(lo) * x));
      long n = lo;
      for (const auto& [freq, c] : terms_) {
        while (n < freq) {
          power *= w;
          ++n;
        }
        sum += c * power;
      }
    } else {
      for (const auto& [freq, c] : terms_) sum += c * unit(wrap01(static_cast<double>(freq) * x));
    }
    return sum;
  }

  /// sum |c_n|, an upper bound for the sup norm.
  double sup_bound() const {
    double s = 0;
    for (const auto& [n, c] : terms_) s += std::abs(c);
    return s;
  }

  /// 2 pi sum |n||c_n|, a Lipschitz bound.
  double lipschitz_bound() const {
    double s = 0;
    for (const auto& [n, c] : terms_) s += std::abs(static_cast<double>(n)) * std::abs(c);
    return kTwoPi * s;
  }

  /// Max of |f| over the uniform grid {i / grid}.
  double grid_sup(int grid) const {
    double best = 0;
    for (int i = 0; i < grid; ++i) best = std::max(best, std::abs((*this)(static_cast<double>(i) / grid)));
    return best;
  }

  /// x -> f(x + a).
  TrigPolynomial shifted(const Angle& a) const {
    Terms out;
    for (const auto& [n, c] : terms_) out[n] = c * a.phase(n);
    return TrigPolynomial(std::move(out));
  }

  /// x -> e^{2 pi i k x} f(x).
  TrigPolynomial frequency_shifted(long k) const {
    Terms out;
    for (const auto& [n, c] : terms_) out[n + k] = c;
    return TrigPolynomial(std::move(out));
  }

  TrigPolynomial& operator+=(const TrigPolynomial& o) {
    for (const auto& [n, c] : o.terms_) terms_[n] += c;
    prune();
    return *this;
  }
  TrigPolynomial& operator-=(const TrigPolynomial& o) { return *this += o * Complex(-1.0); }
  TrigPolynomial& operator*=(Complex s) {
    for (auto& [n, c] : terms_) c *= s;
    prune();
    return *this;
  }
  friend TrigPolynomial operator+(TrigPolynomial a, const TrigPolynomial& b) { return a += b; }
  friend TrigPolynomial operator-(TrigPolynomial a, const TrigPolynomial& b) { return a -= b; }
  friend TrigPolynomial operator*(TrigPolynomial a, Complex s) { return a *= s; }
  friend TrigPolynomial operator*(Complex s, TrigPolynomial a) { return a *= s; }

  /// Largest coefficient-wise difference over the union of supports.
  friend double coefficient_distance(const TrigPolynomial& a, const TrigPolynomial& b) {
    double d = 0;
    for (const auto& [n, c] : a.terms_) d = std::max(d, std::abs(c - b.coefficient(n)));
    for (const auto& [n, c] : b.terms_) d = std::max(d, std::abs(c - a.coefficient(n)));
    return d;
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it = (it->second == Complex{}) ? terms_.erase(it) : std::next(it);
    }
  }

  Terms terms_;
};

/// Fourier data of rho and of candidate solutions phi share one carrier.
using FourierSeries = TrigPolynomial;

/// (x, y) -> sum c_{m,n} e^{2 pi i (m x + n y)}.
class BivariateTrigPolynomial {
 public:
  using Key = std::pair<long, long>;
  using Terms = std::map<Key, Complex>;

  BivariateTrigPolynomial() = default;
  explicit BivariateTrigPolynomial(Terms terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it = (it->second == Complex{}) ? terms_.erase(it) : std::next(it);
    }
  }

  /// (x, y) -> e^{2 pi i k y} f(x).
  static BivariateTrigPolynomial from_univariate(const TrigPolynomial& f, long k) {
    Terms out;
    for (const auto& [n, c] : f.terms()) out[{n, k}] = c;
    return BivariateTrigPolynomial(std::move(out));
  }

  const Terms& terms() const { return terms_; }

  Complex operator()(double x, double y) const {
    Complex sum{};
    for (const auto& [key, c] : terms_) {
      sum += c * unit(wrap01(static_cast<double>(key.first) * x + static_cast<double>(key.second) * y));
    }
    return sum;
  }

  /// x -> integral of e^{-2 pi i k y} f(x, y) dy.
  TrigPolynomial y_component(long k) const {
    TrigPolynomial::Terms out;
    for (const auto& [key, c] : terms_) {
      if (key.second == k) out[key.first] += c;
    }
    return TrigPolynomial(std::move(out));
  }

  /// (x, y) -> f(x + a, y + b).
  BivariateTrigPolynomial shifted(const Angle& a, const Angle& b) const {
    Terms out;
    for (const auto& [key, c] : terms_) out[key] = c * a.phase(key.first) * b.phase(key.second);
    return BivariateTrigPolynomial(std::move(out));
  }

  friend double coefficient_distance(const BivariateTrigPolynomial& a, const BivariateTrigPolynomial& b) {
    auto coeff = [](const BivariateTrigPolynomial& p, const Key& k) {
      auto it = p.terms_.find(k);
      return it == p.terms_.end() ? Complex{} : it->second;
    };
    double d = 0;
    for (const auto& [k, c] : a.terms_) d = std::max(d, std::abs(c - coeff(b, k)));
    for (const auto& [k, c] : b.terms_) d = std::max(d, std::abs(c - coeff(a, k)));
    return d;
  }

 private:
  Terms terms_;
};

}  // namespace vortexlab
