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

// Cylindrical vortices (x, v) -> (x + alpha, Psi(x) v + rho(x)).
//
// Two fiber models share one set of algorithms:
//   RotationVortex  fiber C, Psi a constant rotation by beta, rho complex.
//   MatrixVortex    fiber R^l, Psi a constant orthogonal matrix, rho given
//                   componentwise (the real part of each trig polynomial).
// Base points are exact Angles in `step`; the numeric routines take the
// base point as a double and keep fibers in binary64. Fiber maps are
// isometries, so rounding in the fiber does not amplify.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <set>
#include <type_traits>
#include <variant>
#include <vector>

#include "vortexlab/angle.hpp"
#include "vortexlab/errors.hpp"
#include "vortexlab/isometry.hpp"
#include "vortexlab/trig_polynomial.hpp"

namespace vortexlab {

struct RotationVortex {
  Angle alpha;
  Angle beta;
  TrigPolynomial rho;
};

struct MatrixVortex {
  Angle alpha;
  Matrix psi;
  std::vector<TrigPolynomial> rho;

  int fiber_dim() const { return static_cast<int>(psi.rows()); }

  void validate() const {
    if (psi.rows() != psi.cols() || psi.rows() < 1) throw InputError("psi must be a square matrix");
    if (static_cast<Eigen::Index>(rho.size()) != psi.rows()) {
      throw InputError("rho must have one component per fiber dimension");
    }
    EuclideanIsometry(psi, Vector::Zero(psi.rows()));  // orthogonality check
  }
};

using VortexSpec = std::variant<RotationVortex, MatrixVortex>;

template <class V>
struct FiberTraits;

template <>
struct FiberTraits<RotationVortex> {
  using Fiber = Complex;
  using Linear = Complex;  // unit complex number
  static Fiber zero(const RotationVortex&) { return {}; }
  static Linear identity(const RotationVortex&) { return 1.0; }
  static double norm(const Fiber& z) { return std::abs(z); }
};

template <>
struct FiberTraits<MatrixVortex> {
  using Fiber = Vector;
  using Linear = Matrix;
  static Fiber zero(const MatrixVortex& v) { return Vector::Zero(v.fiber_dim()); }
  static Linear identity(const MatrixVortex& v) { return Matrix::Identity(v.fiber_dim(), v.fiber_dim()); }
  static double norm(const Fiber& z) { return z.norm(); }
};

inline int fiber_dim(const RotationVortex&) { return 2; }
inline int fiber_dim(const MatrixVortex& v) { return v.fiber_dim(); }
inline int fiber_dim(const VortexSpec& v) {
  return std::visit([](const auto& w) { return fiber_dim(w); }, v);
}
inline const Angle& base_angle(const VortexSpec& v) {
  return std::visit([](const auto& w) -> const Angle& { return w.alpha; }, v);
}

// Psi is constant in both fiber models; loops hoist it out.
inline Complex linear_at(const RotationVortex& v, double) { return v.beta.phase(); }
inline Matrix linear_at(const MatrixVortex& v, double) { return v.psi; }

inline Complex translation_at(const RotationVortex& v, double x) { return v.rho(x); }
inline Vector translation_at(const MatrixVortex& v, double x) {
  Vector out(v.fiber_dim());
  for (int i = 0; i < v.fiber_dim(); ++i) out[i] = v.rho[static_cast<std::size_t>(i)](x).real();
  return out;
}

/// (Psi_n, rho_n): the fiber map of F^n over a base point.
template <class Linear, class Fiber>
struct CocycleData {
  long n = 0;
  Linear linear;
  Fiber translation;

  Fiber apply(const Fiber& z) const { return linear * z + translation; }
};

template <class V>
using CocycleOf = CocycleData<typename FiberTraits<V>::Linear, typename FiberTraits<V>::Fiber>;

template <class V>
struct State {
  Angle x;
  typename FiberTraits<V>::Fiber z;
};

namespace detail {

inline void check_fiber(const RotationVortex&, const Complex&) {}
inline void check_fiber(const MatrixVortex& v, const Vector& z) {
  if (z.size() != v.fiber_dim()) throw InputError("fiber vector dimension does not match the vortex");
}

}  // namespace detail

/// One application of F, exact in the base coordinate.
template <class V>
State<V> step(const V& v, const State<V>& s) {
  detail::check_fiber(v, s.z);
  const double x = s.x.to_double();
  return {s.x + v.alpha, linear_at(v, x) * s.z + translation_at(v, x)};
}

/// One application of F^{-1}.
template <class V>
State<V> step_back(const V& v, const State<V>& s) {
  detail::check_fiber(v, s.z);
  const Angle prev = s.x - v.alpha;
  const double x = prev.to_double();
  const auto lin = linear_at(v, x);
  if constexpr (std::is_same_v<V, RotationVortex>) {
    return {prev, std::conj(lin) * (s.z - translation_at(v, x))};
  } else {
    return {prev, lin.transpose() * (s.z - translation_at(v, x))};
  }
}

/// Fiber map of F^n over x. Negative n composes inverse fiber maps in
/// reverse order.
template <class V>
CocycleOf<V> cocycle(const V& v, long n, double x) {
  using T = FiberTraits<V>;
  CocycleOf<V> out{n, T::identity(v), T::zero(v)};
  const double a = v.alpha.to_double();
  const auto psi = linear_at(v, x);
  auto psi_inv = psi;
  if constexpr (std::is_same_v<V, RotationVortex>) {
    psi_inv = std::conj(psi);
  } else {
    psi_inv.transposeInPlace();
  }
  if (n >= 0) {
    for (long j = 0; j < n; ++j) {
      const double xj = wrap01(x + static_cast<double>(j) * a);
      out.linear = psi * out.linear;
      out.translation = psi * out.translation + translation_at(v, xj);
    }
  } else {
    for (long j = 1; j <= -n; ++j) {
      const double xj = wrap01(x - static_cast<double>(j) * a);
      out.linear = psi_inv * out.linear;
      out.translation = psi_inv * (out.translation - translation_at(v, xj));
    }
  }
  return out;
}

/// Cocycles over x for n = 0, ..., n_max in a single pass.
template <class V>
std::vector<CocycleOf<V>> cocycle_series(const V& v, double x, long n_max) {
  using T = FiberTraits<V>;
  std::vector<CocycleOf<V>> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, n_max) + 1));
  out.push_back({0, T::identity(v), T::zero(v)});
  const double a = v.alpha.to_double();
  const auto lin = linear_at(v, x);
  for (long j = 0; j < n_max; ++j) {
    const double xj = wrap01(x + static_cast<double>(j) * a);
    const auto& prev = out.back();
    out.push_back({j + 1, lin * prev.linear, lin * prev.translation + translation_at(v, xj)});
  }
  return out;
}

/// sum_{j<n} f(T^j x).
template <class F, class Map, class Point>
auto birkhoff_sum(F&& f, Map&& base_map, long n, Point x) {
  if (n <= 0) throw InputError("birkhoff_sum needs n >= 1");
  auto sum = f(x);
  for (long j = 1; j < n; ++j) {
    x = base_map(x);
    sum += f(x);
  }
  return sum;
}

struct DriftReport {
  std::vector<long> n_values;
  std::vector<double> sup_ratios;
  double extrapolated_drift = 0;
};

/// sup over the grid {i/grid} of |rho_n(x)| / n along n = 1, 2, 4, ...
/// (and n_max itself).
template <class V>
DriftReport drift_estimate(const V& v, long n_max, int grid) {
  if (n_max < 1 || grid < 1) throw InputError("drift_estimate needs n_max >= 1 and grid >= 1");
  using T = FiberTraits<V>;
  DriftReport report;
  for (long n = 1; n <= n_max; n *= 2) report.n_values.push_back(n);
  if (report.n_values.back() != n_max) report.n_values.push_back(n_max);
  report.sup_ratios.assign(report.n_values.size(), 0.0);
  const double a = v.alpha.to_double();
  const auto psi = linear_at(v, 0.0);
  for (int i = 0; i < grid; ++i) {
    const double x = static_cast<double>(i) / grid;
    auto z = T::zero(v);
    std::size_t checkpoint = 0;
    for (long j = 0; j < n_max; ++j) {
      const double xj = wrap01(x + static_cast<double>(j) * a);
      z = psi * z + translation_at(v, xj);
      if (j + 1 == report.n_values[checkpoint]) {
        auto& r = report.sup_ratios[checkpoint];
        r = std::max(r, T::norm(z) / static_cast<double>(j + 1));
        ++checkpoint;
      }
    }
  }
  report.extrapolated_drift = report.sup_ratios.back();
  return report;
}

/// F^2 as a vortex of the same kind.
inline RotationVortex square(const RotationVortex& v) {
  return {v.alpha.times(2), v.beta.times(2), v.rho * v.beta.phase() + v.rho.shifted(v.alpha)};
}

inline MatrixVortex square(const MatrixVortex& v) {
  MatrixVortex out{v.alpha.times(2), v.psi * v.psi, {}};
  const auto l = static_cast<std::size_t>(v.fiber_dim());
  for (std::size_t i = 0; i < l; ++i) {
    TrigPolynomial comp = v.rho[i].shifted(v.alpha);
    for (std::size_t k = 0; k < l; ++k) {
      comp += v.rho[k] * Complex(v.psi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)));
    }
    out.rho.push_back(std::move(comp));
  }
  return out;
}

inline VortexSpec square(const VortexSpec& v) {
  return std::visit([](const auto& w) -> VortexSpec { return square(w); }, v);
}

struct EscapeReport {
  std::optional<long> forward_exit;
  std::optional<long> backward_exit;
  bool recurrent_within_horizon = false;
  long horizon = 0;
  double radius = 0;
};

/// First time the fiber leaves the closed ball of `radius`, in each time
/// direction. A heuristic: absence of an exit only means "no exit within
/// the horizon".
template <class V>
EscapeReport escape_scan(const V& v, const State<V>& start, long n_max, double radius) {
  if (n_max < 1) throw InputError("escape_scan needs n_max >= 1");
  using T = FiberTraits<V>;
  EscapeReport report;
  report.horizon = n_max;
  report.radius = radius;
  State<V> fwd = start, bwd = start;
  for (long n = 1; n <= n_max && !(report.forward_exit && report.backward_exit); ++n) {
    if (!report.forward_exit) {
      fwd = step(v, fwd);
      if (T::norm(fwd.z) > radius) report.forward_exit = n;
    }
    if (!report.backward_exit) {
      bwd = step_back(v, bwd);
      if (T::norm(bwd.z) > radius) report.backward_exit = n;
    }
  }
  report.recurrent_within_horizon = !report.forward_exit && !report.backward_exit;
  return report;
}

/// A vortex over a finite base: point j carries the isometry I_j and moves
/// to next[j]. The default base map is j -> j + 1 mod p.
class FiniteBaseVortex {
 public:
  FiniteBaseVortex() = default;

  explicit FiniteBaseVortex(std::vector<EuclideanIsometry> isometries)
      : FiniteBaseVortex(isometries, cyclic_next(isometries.size())) {}

  FiniteBaseVortex(std::vector<EuclideanIsometry> isometries, std::vector<std::size_t> next,
                   std::vector<long> labels = {})
      : isometries_(std::move(isometries)), next_(std::move(next)), labels_(std::move(labels)) {
    const std::size_t p = isometries_.size();
    if (p == 0) throw InputError("finite base vortex needs at least one base point");
    if (next_.size() != p) throw InputError("base map must have one entry per base point");
    std::vector<bool> hit(p, false);
    for (std::size_t j : next_) {
      if (j >= p || hit[j]) throw InputError("base map must be a permutation of the base");
      hit[j] = true;
    }
    for (const auto& iso : isometries_) {
      if (iso.dim() != isometries_.front().dim()) throw InputError("isometries must share one fiber dimension");
    }
    if (labels_.empty()) {
      for (std::size_t j = 0; j < p; ++j) labels_.push_back(static_cast<long>(j));
    }
    if (labels_.size() != p) throw InputError("labels must have one entry per base point");
    prev_.assign(p, 0);
    for (std::size_t j = 0; j < p; ++j) prev_[next_[j]] = j;
  }

  std::size_t size() const { return isometries_.size(); }
  int fiber_dim() const { return isometries_.front().dim(); }
  const std::vector<EuclideanIsometry>& isometries() const { return isometries_; }
  const EuclideanIsometry& isometry(std::size_t j) const { return isometries_.at(j); }
  const std::vector<std::size_t>& next() const { return next_; }
  std::size_t next(std::size_t j) const { return next_.at(j); }
  std::size_t prev(std::size_t j) const { return prev_.at(j); }
  const std::vector<long>& labels() const { return labels_; }

  /// Points of the base-map cycle through j, starting at j.
  std::vector<std::size_t> cycle_of(std::size_t j) const {
    std::vector<std::size_t> out{j};
    for (std::size_t k = next(j); k != j; k = next(k)) out.push_back(k);
    return out;
  }

  bool is_cyclic_shift() const {
    for (std::size_t j = 0; j < size(); ++j) {
      if (next_[j] != (j + 1) % size()) return false;
    }
    return true;
  }

  static std::vector<std::size_t> cyclic_next(std::size_t p) {
    std::vector<std::size_t> n(p);
    for (std::size_t j = 0; j < p; ++j) n[j] = (j + 1) % p;
    return n;
  }

 private:
  std::vector<EuclideanIsometry> isometries_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> prev_;
  std::vector<long> labels_;
};

struct FiniteState {
  std::size_t j = 0;
  Vector z;
};

inline FiniteState step(const FiniteBaseVortex& v, const FiniteState& s) {
  return {v.next(s.j), v.isometry(s.j)(s.z)};
}

/// Composite isometry of F^n over base point j (n may be negative).
inline EuclideanIsometry cocycle_isometry(const FiniteBaseVortex& v, long n, std::size_t j) {
  EuclideanIsometry out = EuclideanIsometry::identity(v.fiber_dim());
  if (n >= 0) {
    for (long k = 0; k < n; ++k) {
      out = v.isometry(j) * out;
      j = v.next(j);
    }
  } else {
    for (long k = 0; k < -n; ++k) {
      j = v.prev(j);
      out = v.isometry(j).inverse() * out;
    }
  }
  return out;
}

inline CocycleData<Matrix, Vector> cocycle(const FiniteBaseVortex& v, long n, std::size_t j) {
  const EuclideanIsometry iso = cocycle_isometry(v, n, j);
  return {n, iso.linear(), iso.translation()};
}

/// F^2 over the same base with base map next o next.
inline FiniteBaseVortex square(const FiniteBaseVortex& v) {
  std::vector<EuclideanIsometry> isos;
  std::vector<std::size_t> next;
  for (std::size_t j = 0; j < v.size(); ++j) {
    isos.push_back(v.isometry(v.next(j)) * v.isometry(j));
    next.push_back(v.next(v.next(j)));
  }
  return FiniteBaseVortex(std::move(isos), std::move(next), v.labels());
}

/// First-return vortex over Y. Points of the result are the elements of Y
/// in increasing order; the base map is the first-return map T_Y.
inline FiniteBaseVortex induced_first_return(const FiniteBaseVortex& v, const std::set<std::size_t>& subset) {
  if (subset.empty()) throw InputError("induced_first_return needs a nonempty subset");
  if (*subset.rbegin() >= v.size()) throw InputError("subset point outside the base");
  std::vector<std::size_t> index_of(v.size(), 0);
  std::size_t i = 0;
  for (std::size_t y : subset) index_of[y] = i++;
  std::vector<EuclideanIsometry> isos;
  std::vector<std::size_t> next;
  std::vector<long> labels;
  for (std::size_t y : subset) {
    EuclideanIsometry acc = v.isometry(y);
    std::size_t j = v.next(y);
    while (!subset.count(j)) {
      acc = v.isometry(j) * acc;
      j = v.next(j);
    }
    isos.push_back(std::move(acc));
    next.push_back(index_of[j]);
    labels.push_back(v.labels()[y]);
  }
  return FiniteBaseVortex(std::move(isos), std::move(next), std::move(labels));
}

}  // namespace vortexlab
