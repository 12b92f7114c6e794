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

// The twisted cohomological equation
//
//   phi(x + alpha) - e^{2 pi i beta} phi(x) = rho(x)
//
// over a circle rotation: approximate solutions by Cesaro averages of the
// twisted Birkhoff sums, exact Fourier solutions with small-divisor
// bookkeeping, and the transfer of solutions to and from the torus lift.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vortexlab/angle.hpp"
#include "vortexlab/cascade.hpp"
#include "vortexlab/errors.hpp"
#include "vortexlab/trig_polynomial.hpp"
#include "vortexlab/vortex.hpp"

namespace vortexlab {

inline constexpr double kResonanceTolerance = 1e-15;

/// || n alpha - beta ||, the distance to the nearest integer, exactly.
inline Rational resonance_distance(const Angle& alpha, const Angle& beta, long n) {
  return distance_to_integer(alpha.value() * n - beta.value());
}

/// |e^{2 pi i (n alpha - beta)} - 1| = 2 sin(pi ||n alpha - beta||).
inline double small_divisor(const Angle& alpha, const Angle& beta, long n) {
  return 2.0 * std::sin(std::numbers::pi * to_double(resonance_distance(alpha, beta, n)));
}

/// True when the divisor at n vanishes: symbolically for exact angles,
/// within the resonance tolerance otherwise.
inline bool is_resonant(const Angle& alpha, const Angle& beta, long n) {
  const Rational d = resonance_distance(alpha, beta, n);
  if (alpha.is_exact() && beta.is_exact()) return d == 0;
  return 2.0 * std::sin(std::numbers::pi * to_double(d)) < kResonanceTolerance;
}

/// rho = phi(. + alpha) - e^{2 pi i beta} phi, coefficientwise.
inline TrigPolynomial coboundary(const TrigPolynomial& phi, const Angle& alpha, const Angle& beta) {
  const Complex lambda = beta.phase();
  TrigPolynomial::Terms out;
  for (const auto& [n, c] : phi.terms()) out[n] = c * (alpha.phase(n) - lambda);
  return TrigPolynomial(std::move(out));
}

/// phi_k = -(1/k) sum_{n=1}^k e^{-2 pi i n beta} rho_n, where rho_n is the
/// twisted Birkhoff sum of the rotation vortex. For beta = 0 this is the
/// Cesaro mean -(rho_1 + ... + rho_k)/k, and in general
///   rho - (phi_k o T - e^{2 pi i beta} phi_k) = e^{-2 pi i k beta} rho_k o T / k.
inline TrigPolynomial cesaro_sections(const TrigPolynomial& rho, const Angle& alpha, const Angle& beta, long k) {
  if (k <= 0) throw InputError("cesaro_sections needs k >= 1");
  const Complex lambda = beta.phase();
  TrigPolynomial::Terms out;
  for (const auto& [m, c] : rho.terms()) {
    // Coefficient of e^{2 pi i m x}: -(c / (k lambda)) sum_{j<k} (k - j) w^j,
    // w = e^{2 pi i (m alpha - beta)}.
    const Complex w = unit(to_double(frac(alpha.value() * m - beta.value())));
    Complex sum{}, power = 1.0;
    for (long j = 0; j < k; ++j) {
      sum += static_cast<double>(k - j) * power;
      power *= w;
    }
    out[m] = -c * sum / (static_cast<double>(k) * lambda);
  }
  return TrigPolynomial(std::move(out));
}

struct DefectReport {
  long k = 0;
  double sup_defect = 0;
  TrigPolynomial section;
};

/// sup over {i/grid} of |rho(x) - [phi(x + alpha) - e^{2 pi i beta} phi(x)]|.
inline DefectReport defect(const TrigPolynomial& rho, const TrigPolynomial& phi, const Angle& alpha,
                           const Angle& beta, int grid, long k = 0) {
  if (grid < 1) throw InputError("defect needs grid >= 1");
  const TrigPolynomial residual = rho - coboundary(phi, alpha, beta);
  return {k, residual.grid_sup(grid), phi};
}

/// sup over {i/grid} of |rho_n(x)| / n.
inline double sup_ratio(const TrigPolynomial& rho, const Angle& alpha, const Angle& beta, long n, int grid) {
  if (n < 1) throw InputError("sup_ratio needs n >= 1");
  if (grid < 1) throw InputError("sup_ratio needs grid >= 1");
  const RotationVortex v{alpha, beta, rho};
  double best = 0;
  for (int i = 0; i < grid; ++i) {
    best = std::max(best, std::abs(cocycle(v, n, static_cast<double>(i) / grid).translation));
  }
  return best / static_cast<double>(n);
}

struct FourierSolution {
  FourierSeries phi;
  double smallest_divisor = 0;
  long smallest_at = 0;
};

/// phi_n = rho_n / (e^{2 pi i n alpha} - e^{2 pi i beta}) on |n| <= N.
/// N defaults to the degree of the input.
inline FourierSolution fourier_solve(const FourierSeries& rho_hat, const Angle& alpha, const Angle& beta,
                                     std::optional<long> truncation = std::nullopt) {
  const long N = truncation.value_or(rho_hat.degree());
  const Complex lambda = beta.phase();
  FourierSolution out;
  out.smallest_divisor = std::numeric_limits<double>::infinity();
  FourierSeries::Terms phi;
  for (const auto& [n, c] : rho_hat.terms()) {
    if (std::labs(n) > N) continue;
    if (is_resonant(alpha, beta, n)) {
      throw ResonanceError(n, "resonant frequency n = " + std::to_string(n) + ": n*alpha - beta is an integer");
    }
    const double d = small_divisor(alpha, beta, n);
    if (d < out.smallest_divisor) {
      out.smallest_divisor = d;
      out.smallest_at = n;
    }
    phi[n] = c / (alpha.phase(n) - lambda);
  }
  out.phi = FourierSeries(std::move(phi));
  if (rho_hat.empty()) out.smallest_divisor = 0;
  return out;
}

struct DiophantineReport {
  double tau = 0;
  long N = 0;
  double best_C = 0;
  long worst_n = 0;
  /// The smallest divisors found, ascending.
  std::vector<std::pair<long, double>> min_values;
  std::optional<long> resonance;
};

/// Scan |e^{2 pi i (n alpha - beta)} - 1| * n^{1 + tau} over 1 <= n <= N.
/// `keep` bounds the length of min_values.
inline DiophantineReport diophantine_scan(const Angle& alpha, const Angle& beta, long N, double tau,
                                          std::size_t keep = 16) {
  if (N < 1) throw InputError("diophantine_scan needs N >= 1");
  if (tau < 0) throw InputError("diophantine_scan needs tau >= 0");
  DiophantineReport r;
  r.tau = tau;
  r.N = N;
  r.best_C = std::numeric_limits<double>::infinity();
  const bool exact = alpha.is_exact() && beta.is_exact();
  Rational phase = frac(-beta.value());
  for (long n = 1; n <= N; ++n) {
    phase = frac(phase + alpha.value());
    const Rational dist = phase <= Rational(1, 2) ? phase : Rational(1 - phase);
    const double d = 2.0 * std::sin(std::numbers::pi * to_double(dist));
    const bool resonant = exact ? dist == 0 : d < kResonanceTolerance;
    if (resonant && !r.resonance) r.resonance = n;
    const double scaled = d * std::pow(static_cast<double>(n), 1.0 + tau);
    if (scaled < r.best_C) {
      r.best_C = scaled;
      r.worst_n = n;
    }
    if (r.min_values.size() < keep || d < r.min_values.back().second) {
      auto pos = std::upper_bound(r.min_values.begin(), r.min_values.end(), d,
                                  [](double v, const auto& e) { return v < e.second; });
      r.min_values.insert(pos, {n, d});
      if (r.min_values.size() > keep) r.min_values.pop_back();
    }
  }
  if (r.resonance) {
    r.best_C = 0;
    r.worst_n = *r.resonance;
  }
  return r;
}

namespace detail {

inline double log2_integer(const Integer& n) {
  const auto bits = static_cast<long>(boost::multiprecision::msb(n));
  if (bits < 1000) return std::log2(n.convert_to<double>());
  const Integer top = n >> static_cast<unsigned>(bits - 60);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 60);
}

/// log10 |e^{2 pi i (n alpha - beta)} - 1| without underflow.
inline double log10_small_divisor(const Angle& alpha, const Angle& beta, long n) {
  const Rational dist = resonance_distance(alpha, beta, n);
  const double t = to_double(dist);
  const double log10_dist =
      (log2_integer(numerator(dist)) - log2_integer(denominator(dist))) * std::log10(2.0);
  const double sinc = t > 0 ? std::sin(std::numbers::pi * t) / (std::numbers::pi * t) : 1.0;
  return std::log10(2.0 * std::numbers::pi) + log10_dist + std::log10(sinc);
}

}  // namespace detail

struct LiouvilleRow {
  long n = 0;
  double log10_divisor = 0;
  double log10_rho = 0;
  double log10_phi = 0;  // log10 |rho_n| - log10 d_n
};

struct LiouvilleReport {
  FourierSeries rho_hat;  // terms that underflow binary64 are omitted
  std::vector<LiouvilleRow> growth;
  /// |phi_n| strictly increasing along the sequence.
  bool increasing = false;
};

/// Growth table |phi_n| = |rho_n| / d_n for given coefficients.
inline LiouvilleReport liouville_growth(const Angle& alpha, const Angle& beta, const FourierSeries& rho_hat) {
  if (rho_hat.empty()) throw DegenerateError("liouville_growth: rho is identically zero");
  LiouvilleReport out;
  out.rho_hat = rho_hat;
  for (const auto& [n, c] : rho_hat.terms()) {
    if (resonance_distance(alpha, beta, n) == 0) throw InputError("liouville_growth: exact resonance at n = " + std::to_string(n));
    LiouvilleRow row;
    row.n = n;
    row.log10_divisor = detail::log10_small_divisor(alpha, beta, n);
    row.log10_rho = std::log10(std::abs(c));
    row.log10_phi = row.log10_rho - row.log10_divisor;
    out.growth.push_back(row);
  }
  out.increasing = std::adjacent_find(out.growth.begin(), out.growth.end(), [](const auto& a, const auto& b) {
                     return b.log10_phi <= a.log10_phi;
                   }) == out.growth.end();
  return out;
}

/// rho_n = min(d_n g(n), n^{-n}) along the given frequencies, so |phi_n| =
/// min(g(n), n^{-n} / d_n): unbounded whenever g grows and d_n decays faster
/// than n^{-n} g(n)^{-1}. Default g(n) = n.
inline LiouvilleReport liouville_generator(const Angle& alpha, const Angle& beta, const std::vector<long>& resonant_ns,
                                           const std::function<double(long)>& growth = {}) {
  if (resonant_ns.empty()) throw InputError("liouville_generator needs at least one frequency");
  const auto g = growth ? growth : [](long n) { return static_cast<double>(n); };
  LiouvilleReport out;
  FourierSeries::Terms terms;
  for (long n : resonant_ns) {
    if (n < 1) throw InputError("liouville_generator frequencies must be positive");
    if (resonance_distance(alpha, beta, n) == 0) {
      throw InputError("liouville_generator: divisor vanishes at n = " + std::to_string(n));
    }
    LiouvilleRow row;
    row.n = n;
    row.log10_divisor = detail::log10_small_divisor(alpha, beta, n);
    const double log10_g = std::log10(g(n));
    row.log10_rho = std::min(row.log10_divisor + log10_g, -static_cast<double>(n) * std::log10(static_cast<double>(n)));
    row.log10_phi = row.log10_rho - row.log10_divisor;
    const double c = std::pow(10.0, row.log10_rho);
    if (c > 0) terms[n] = c;
    out.growth.push_back(row);
  }
  out.rho_hat = FourierSeries(std::move(terms));
  out.increasing = std::adjacent_find(out.growth.begin(), out.growth.end(), [](const auto& a, const auto& b) {
                     return b.log10_phi <= a.log10_phi;
                   }) == out.growth.end();
  return out;
}

/// s = r - 1 - tau when r > tau + 1 and s is not an integer.
inline std::optional<double> herman_regularity(double r, double tau) {
  if (!(r > tau + 1.0)) return std::nullopt;
  const double s = r - 1.0 - tau;
  if (std::abs(s - std::round(s)) < 1e-12) return std::nullopt;
  return s;
}

/// Coefficient-sum bound on sup |phi(. + alpha) - e^{2 pi i beta} phi - rho|.
inline double circle_residual_bound(const TrigPolynomial& rho, const TrigPolynomial& phi, const Angle& alpha,
                                    const Angle& beta) {
  return (coboundary(phi, alpha, beta) - rho).sup_bound();
}

/// Coefficient-sum bound on sup |phi(x + alpha, y - beta) - phi(x, y) - chi(x, y)|
/// for the lift of the rotation vortex (alpha, beta, rho).
inline double torus_residual_bound(const TrigPolynomial& rho, const BivariateTrigPolynomial& phi, const Angle& alpha,
                                   const Angle& beta) {
  const LiftedCascade g = lift_cascade(RotationVortex{alpha, beta, rho});
  BivariateTrigPolynomial::Terms residual;
  const BivariateTrigPolynomial moved = phi.shifted(alpha, -beta);
  for (const auto& [key, c] : moved.terms()) residual[key] += c;
  for (const auto& [key, c] : phi.terms()) residual[key] -= c;
  for (const auto& [key, c] : g.chi().terms()) residual[key] -= c;
  double s = 0;
  for (const auto& [key, c] : residual) s += std::abs(c);
  return s;
}

/// phi(x, y) = e^{2 pi i y} phi_*(x): a solution on the circle gives one on
/// the torus lift.
inline BivariateTrigPolynomial transfer_reduce_to_lift(const TrigPolynomial& rho, const TrigPolynomial& phi_star,
                                                       const Angle& alpha, const Angle& beta, double tol = 1e-9) {
  const double in = circle_residual_bound(rho, phi_star, alpha, beta);
  if (in > tol) throw InputError("transfer: input does not solve the circle equation (residual " + std::to_string(in) + ")");
  BivariateTrigPolynomial phi = BivariateTrigPolynomial::from_univariate(phi_star, 1);
  const double out = torus_residual_bound(rho, phi, alpha, beta);
  if (out > tol) throw ConstructionBug("transfer: lifted section fails the torus equation");
  return phi;
}

/// phi_*(x) = integral of e^{-2 pi i y} phi(x, y) dy: a solution on the torus
/// lift gives one on the circle.
inline TrigPolynomial transfer_reduce_from_lift(const TrigPolynomial& rho, const BivariateTrigPolynomial& phi,
                                                const Angle& alpha, const Angle& beta, double tol = 1e-9) {
  const double in = torus_residual_bound(rho, phi, alpha, beta);
  if (in > tol) throw InputError("transfer: input does not solve the torus equation (residual " + std::to_string(in) + ")");
  TrigPolynomial phi_star = phi.y_component(1);
  const double out = circle_residual_bound(rho, phi_star, alpha, beta);
  if (out > tol) throw ConstructionBug("transfer: reduced section fails the circle equation");
  return phi_star;
}

}  // namespace vortexlab
