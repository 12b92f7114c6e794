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


// Closed invariant sets at infinity for Euclidean isometries and for
// vortices over a finite base.
//
// A certificate K for (I, U) is closed, misses the bounded open set U,
// satisfies I(K) = I^{-1}(K) = K, is connected together with the point at
// infinity, and touches the boundary of U.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vortexlab/errors.hpp"
#include "vortexlab/exact.hpp"
#include "vortexlab/isometry.hpp"
#include "vortexlab/regions.hpp"
#include "vortexlab/vortex.hpp"

namespace vortexlab {

inline constexpr double kIdentityTolerance = 1e-10;
inline constexpr double kFixedPointTolerance = 1e-9;
inline constexpr double kWitnessTolerance = 1e-9;

/// An invariant block of an orientation preserving linear part, in the
/// columns [first, first + size) of the splitting basis. Two-dimensional
/// blocks rotate by `angle` turns; one-dimensional blocks are fixed.
struct InvariantBlock {
  int first = 0;
  int size = 1;
  double angle = 0;
};

struct NormalForm {
  enum class Kind { Translation, RotationAboutPoint, GlideOrReversing, BlockDecomposition };

  Kind kind = Kind::Translation;
  Vector translation;                        // Translation
  Vector center;                             // RotationAboutPoint
  double angle = 0;                          // RotationAboutPoint, turns in [0, 1)
  std::shared_ptr<const NormalForm> square;  // GlideOrReversing: the form of I o I
  Matrix basis;                              // BlockDecomposition, orthonormal columns
  std::vector<InvariantBlock> blocks;        // rotation blocks first, then fixed lines
  Vector translation_in_basis;               // basis^T rho
};

inline const char* to_string(NormalForm::Kind k) {
  switch (k) {
    case NormalForm::Kind::Translation: return "translation";
    case NormalForm::Kind::RotationAboutPoint: return "rotation";
    case NormalForm::Kind::GlideOrReversing: return "orientation-reversing";
    case NormalForm::Kind::BlockDecomposition: return "blocks";
  }
  return "";
}

namespace detail {

inline NormalForm planar_normal_form(const EuclideanIsometry& iso) {
  const Matrix& psi = iso.linear();
  const Vector& rho = iso.translation();
  NormalForm nf;
  if ((psi - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= kIdentityTolerance) {
    nf.kind = NormalForm::Kind::Translation;
    nf.translation = rho;
    return nf;
  }
  nf.kind = NormalForm::Kind::RotationAboutPoint;
  nf.center = (Matrix::Identity(2, 2) - psi).partialPivLu().solve(rho);
  nf.angle = wrap01(std::atan2(psi(1, 0), psi(0, 0)) / kTwoPi);
  const double miss = (iso(nf.center) - nf.center).norm();
  if (!(miss <= kFixedPointTolerance * std::max(1.0, nf.center.norm()))) {
    throw AmbiguityError("rotation center is ill conditioned: |I(v0) - v0| = " + std::to_string(miss) +
                         " for a rotation by " + std::to_string(nf.angle) + " turns");
  }
  return nf;
}

inline NormalForm block_normal_form(const EuclideanIsometry& iso) {
  const Matrix& psi = iso.linear();
  const auto l = psi.rows();
  Eigen::RealSchur<Matrix> schur(psi);
  const Matrix& t = schur.matrixT();
  const Matrix& q = schur.matrixU();
  std::vector<std::pair<Eigen::Index, double>> rotations;  // (first column, angle)
  std::vector<Eigen::Index> fixed, flipped;
  std::vector<bool> in_block(static_cast<std::size_t>(l), false);
  for (Eigen::Index i = 0; i < l;) {
    if (i + 1 < l && t(i + 1, i) != 0) {
      const double s = t(i + 1, i), c = t(i, i);
      if (std::abs(s) < kIdentityTolerance) {
        throw AmbiguityError("eigenvalue pair within 1e-10 of the real axis at Schur block " + std::to_string(i));
      }
      rotations.emplace_back(i, wrap01(std::atan2(s, c) / kTwoPi));
      i += 2;
    } else {
      const double d = t(i, i);
      if (std::abs(d - 1) <= kIdentityTolerance) fixed.push_back(i);
      else if (std::abs(d + 1) <= kIdentityTolerance) flipped.push_back(i);
      else throw AmbiguityError("real eigenvalue " + std::to_string(d) + " is not +-1 within 1e-10");
      ++i;
    }
  }
  // Everything off the diagonal blocks must vanish for an orthogonal matrix.
  for (Eigen::Index i = 0; i < l; ++i) {
    for (Eigen::Index j = i + 1; j < l; ++j) {
      const bool same_block = std::any_of(rotations.begin(), rotations.end(),
                                          [&](const auto& r) { return i == r.first && j == r.first + 1; });
      if (!same_block && std::abs(t(i, j)) > kFixedPointTolerance) {
        throw AmbiguityError("Schur form is not block diagonal (entry " + std::to_string(t(i, j)) + ")");
      }
    }
  }
  NormalForm nf;
  nf.kind = NormalForm::Kind::BlockDecomposition;
  nf.basis = Matrix(l, l);
  int col = 0;
  for (const auto& [first, angle] : rotations) {
    nf.basis.middleCols(col, 2) = q.middleCols(first, 2);
    nf.blocks.push_back({col, 2, angle});
    col += 2;
  }
  // Pairs of -1 eigendirections form half-turn blocks.
  for (std::size_t k = 0; k + 1 < flipped.size(); k += 2) {
    nf.basis.col(col) = q.col(flipped[k]);
    nf.basis.col(col + 1) = q.col(flipped[k + 1]);
    nf.blocks.push_back({col, 2, 0.5});
    col += 2;
  }
  for (Eigen::Index f : fixed) {
    nf.basis.col(col) = q.col(f);
    nf.blocks.push_back({col, 1, 0.0});
    ++col;
  }
  nf.translation_in_basis = nf.basis.transpose() * iso.translation();
  return nf;
}

}  // namespace detail

/// Classification of x -> Psi x + rho. Orientation reversing maps are
/// reported through the form of their square.
inline NormalForm normal_form(const EuclideanIsometry& iso) {
  const int l = iso.dim();
  if (l < 2) throw InputError("normal_form needs fiber dimension >= 2");
  if (!iso.preserves_orientation()) {
    NormalForm nf;
    nf.kind = NormalForm::Kind::GlideOrReversing;
    nf.square = std::make_shared<const NormalForm>(normal_form(iso * iso));
    return nf;
  }
  if (l == 2) return detail::planar_normal_form(iso);
  if ((iso.linear() - Matrix::Identity(l, l)).cwiseAbs().maxCoeff() <= kIdentityTolerance) {
    NormalForm nf;
    nf.kind = NormalForm::Kind::Translation;
    nf.translation = iso.translation();
    return nf;
  }
  return detail::block_normal_form(iso);
}

struct BpmReport {
  bool avoidance = false;
  std::size_t avoidance_samples = 0;
  bool connected = false;
  bool invariant_symbolic = false;
  bool invariant_sampled = false;
  std::size_t invariance_samples = 0;
  bool witness = false;
  double witness_boundary_distance = 0;

  bool ok() const { return avoidance && connected && invariant_symbolic && invariant_sampled && witness; }

  /// Name of the first failing property, empty when all hold.
  std::string first_failure() const {
    if (!avoidance) return "avoidance";
    if (!connected) return "connectivity";
    if (!invariant_symbolic || !invariant_sampled) return "invariance";
    if (!witness) return "witness";
    return "";
  }
};

struct BpmCertificate {
  /// One closed set per base point; a single entry for a lone isometry.
  std::vector<SymbolicRegion> regions;
  std::size_t witness_fiber = 0;
  Vector witness;
  std::string construction;
  std::optional<BpmReport> checks;

  const SymbolicRegion& region() const { return regions.at(0); }
};

namespace detail {

struct Built {
  SymbolicRegion region;
  Vector witness;
  std::string construction;
};

inline Built build(const EuclideanIsometry& iso, const BoundedRegion& u);

inline double witness_tolerance(const Vector& w) { return kWitnessTolerance * std::max(1.0, w.norm()); }

inline Built tangent_band(const Vector& direction, const BoundedRegion& u) {
  const Extremal hi = u.support(direction);
  const double lo = -u.support(-direction).value;
  return {BandComplement{direction, lo, hi.value}, hi.point, "translation-band"};
}

inline Built planar_translation(const Vector& t, const BoundedRegion& u) {
  if (t.norm() <= 1e-12) throw DegenerateError("the isometry is the identity: no set at infinity is forced to avoid U");
  Vector normal(2);
  normal << -t[1], t[0];
  return tangent_band(normal / t.norm(), u);
}

inline Built ball_about(const Vector& center, const BoundedRegion& u, std::string construction) {
  const Extremal far = u.farthest(center);
  return {BallComplement{center, far.value}, far.point, std::move(construction)};
}

/// K = KK u I^{-1}(KK) where KK is built for I o I avoiding U u I(U). An
/// involution has no such KK; it fixes rho / 2 and the ball complement
/// about that point works directly.
inline Built square_lemma(const EuclideanIsometry& iso, const BoundedRegion& u) {
  const EuclideanIsometry sq = iso * iso;
  BoundedRegion doubled = u;
  doubled.merge(u.image(iso));
  std::optional<Built> inner;
  try {
    inner = build(sq, doubled);
  } catch (const DegenerateError&) {
    const Vector fixed = iso.translation() / 2;
    const double miss = (iso(fixed) - fixed).norm();
    if (miss > kFixedPointTolerance * std::max(1.0, fixed.norm())) {
      throw AmbiguityError("orientation reversing involution without a fixed point at rho/2");
    }
    return ball_about(fixed, u, "involution-ball");
  }
  const EuclideanIsometry inv = iso.inverse();
  SymbolicRegion k = simplify(RegionUnion{{inner->region, image(inv, inner->region)}});
  Vector w = inner->witness;
  if (u.distance_to_closure(w) > witness_tolerance(w)) w = inv(w);
  return {std::move(k), std::move(w), "square-lemma(" + inner->construction + ")"};
}

inline Built planar(const EuclideanIsometry& iso, const BoundedRegion& u) {
  const NormalForm nf = normal_form(iso);
  switch (nf.kind) {
    case NormalForm::Kind::Translation: return planar_translation(nf.translation, u);
    case NormalForm::Kind::RotationAboutPoint: return ball_about(nf.center, u, "rotation-ball");
    default: return square_lemma(iso, u);
  }
}

inline Built highdim(const EuclideanIsometry& iso, const BoundedRegion& u) {
  const int l = iso.dim();
  const NormalForm nf = normal_form(iso);
  if (nf.kind == NormalForm::Kind::GlideOrReversing) return square_lemma(iso, u);
  if (nf.kind == NormalForm::Kind::BlockDecomposition && nf.blocks.front().size == 2) {
    // First rotation block: its plane is invariant, the projected map is a
    // planar rotation, and the orthogonal complement is a full factor.
    const Matrix basis = nf.basis.middleCols(nf.blocks.front().first, 2);
    const EuclideanIsometry projected(basis.transpose() * iso.linear() * basis, basis.transpose() * iso.translation());
    const NormalForm pnf = detail::planar_normal_form(projected);
    if (pnf.kind != NormalForm::Kind::RotationAboutPoint) {
      throw AmbiguityError("rotation block degenerates to a translation after projection");
    }
    const Extremal far = u.farthest(basis, pnf.center);
    auto base = std::make_shared<const SymbolicRegion>(BallComplement{pnf.center, far.value});
    return {ProductWithFullFactor{std::move(base), basis}, far.point, "product(rotation-ball)"};
  }
  // Pure translation: work in the plane spanned by t and a unit vector
  // orthogonal to it, where the band normal is that second vector.
  const Vector t = iso.translation();
  if (t.norm() <= 1e-12) throw DegenerateError("the isometry is the identity: no set at infinity is forced to avoid U");
  const Vector u1 = t / t.norm();
  Eigen::Index axis = 0;
  u1.cwiseAbs().minCoeff(&axis);
  Vector u2 = Vector::Unit(l, axis) - u1[axis] * u1;
  u2.normalize();
  Matrix basis(l, 2);
  basis.col(0) = u1;
  basis.col(1) = u2;
  const Extremal hi = u.support(u2);
  const double lo = -u.support(-u2).value;
  Vector normal(2);
  normal << 0, 1;
  auto base = std::make_shared<const SymbolicRegion>(BandComplement{normal, lo, hi.value});
  return {ProductWithFullFactor{std::move(base), basis}, hi.point, "product(translation-band)"};
}

inline Built build(const EuclideanIsometry& iso, const BoundedRegion& u) {
  if (u.empty()) throw InputError("the region to avoid must be nonempty");
  if (u.dim() != iso.dim()) throw InputError("region and isometry dimensions differ");
  if (iso.dim() == 2) return planar(iso, u);
  if (iso.dim() >= 3) return highdim(iso, u);
  throw InputError("invariant sets at infinity need fiber dimension >= 2");
}

inline BpmCertificate single(Built b) {
  BpmCertificate c;
  c.regions.push_back(std::move(b.region));
  c.witness = std::move(b.witness);
  c.construction = std::move(b.construction);
  return c;
}

}  // namespace detail

inline BpmCertificate bpm_planar(const EuclideanIsometry& iso, const BoundedRegion& u) {
  if (iso.dim() != 2) throw InputError("bpm_planar needs a planar isometry");
  return detail::single(detail::build(iso, u));
}

inline BpmCertificate bpm_highdim(const EuclideanIsometry& iso, const BoundedRegion& u) {
  if (iso.dim() < 3) throw InputError("bpm_highdim needs fiber dimension >= 3");
  return detail::single(detail::build(iso, u));
}

/// bpm_planar or bpm_highdim by dimension.
inline BpmCertificate bpm(const EuclideanIsometry& iso, const BoundedRegion& u) {
  return detail::single(detail::build(iso, u));
}

/// Per-fiber sets for a vortex over a finite base. On each cycle
/// c_0 -> ... -> c_{L-1} of the base map, with A_i = I_{c_{i-1}} o ... o I_{c_0},
/// K_{c_0} is built for A_L avoiding the union of A_i^{-1}(U_{c_i}) and
/// K_{c_i} = A_i(K_{c_0}).
inline BpmCertificate bpm_periodic(const FiniteBaseVortex& v, const std::vector<BoundedRegion>& tube) {
  const std::size_t p = v.size();
  if (tube.size() != p) throw InputError("the tube needs one region per base point");
  for (std::size_t j = 0; j < p; ++j) {
    if (tube[j].empty()) throw TubeViolation("fiber " + std::to_string(j) + " of the tube is empty");
    if (tube[j].dim() != v.fiber_dim()) throw InputError("tube fiber " + std::to_string(j) + " has the wrong dimension");
  }
  std::vector<std::optional<SymbolicRegion>> regions(p);
  BpmCertificate cert;
  bool have_witness = false;
  for (std::size_t start = 0; start < p; ++start) {
    if (regions[start]) continue;
    const std::vector<std::size_t> cycle = v.cycle_of(start);
    std::vector<EuclideanIsometry> partial{EuclideanIsometry::identity(v.fiber_dim())};
    BoundedRegion pulled = tube[cycle[0]];
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      partial.push_back(v.isometry(cycle[i - 1]) * partial.back());
      pulled.merge(tube[cycle[i]].image(partial.back().inverse()));
    }
    const EuclideanIsometry full = v.isometry(cycle.back()) * partial.back();
    detail::Built base = detail::build(full, pulled);
    for (std::size_t i = 0; i < cycle.size(); ++i) regions[cycle[i]] = simplify(image(partial[i], base.region));
    if (!have_witness) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const BoundedRegion pulled_fiber = tube[cycle[i]].image(partial[i].inverse());
        if (pulled_fiber.distance_to_closure(base.witness) <= detail::witness_tolerance(base.witness)) {
          cert.witness_fiber = cycle[i];
          cert.witness = partial[i](base.witness);
          break;
        }
      }
      cert.construction = "cycle(" + base.construction + ")";
      have_witness = true;
    }
  }
  for (auto& r : regions) cert.regions.push_back(std::move(*r));
  return cert;
}

/// The four defining properties, checked without throwing. Avoidance and
/// invariance use `samples` points per fiber; invariance is also decided
/// on the symbolic parameters.
inline BpmReport check_bpm(const BpmCertificate& cert, const FiniteBaseVortex& v, const std::vector<BoundedRegion>& tube,
                           std::size_t samples, std::uint64_t seed = 1) {
  const std::size_t p = v.size();
  if (cert.regions.size() != p || tube.size() != p) throw InputError("certificate, vortex and tube sizes differ");
  std::mt19937_64 rng(seed);
  BpmReport r;
  double scale = 1;
  for (const auto& t : tube) scale = std::max(scale, t.extent());

  r.avoidance = true;
  for (std::size_t j = 0; j < p; ++j) {
    for (const Vector& point : tube[j].sample(samples, rng)) {
      ++r.avoidance_samples;
      if (contains(cert.regions[j], point)) r.avoidance = false;
    }
  }

  r.connected = std::all_of(cert.regions.begin(), cert.regions.end(),
                            [](const SymbolicRegion& k) { return connected_with_infinity(k); });

  r.invariant_symbolic = true;
  r.invariant_sampled = true;
  auto slack = [](const Vector& w) { return 1e-9 * (1 + w.norm()); };
  for (std::size_t j = 0; j < p; ++j) {
    const EuclideanIsometry& iso = v.isometry(j);
    const SymbolicRegion& here = cert.regions[j];
    const SymbolicRegion& there = cert.regions[v.next(j)];
    if (!equivalent(image(iso, here), there)) r.invariant_symbolic = false;
    for (const Vector& point : sample(here, samples, rng, scale)) {
      ++r.invariance_samples;
      const Vector moved = iso(point);
      if (!contains(there, moved, slack(moved))) r.invariant_sampled = false;
    }
    const EuclideanIsometry inv = iso.inverse();
    for (const Vector& point : sample(there, samples, rng, scale)) {
      ++r.invariance_samples;
      const Vector moved = inv(point);
      if (!contains(here, moved, slack(moved))) r.invariant_sampled = false;
    }
  }

  const std::size_t j = cert.witness_fiber;
  if (j < p && cert.witness.size() == tube[j].dim()) {
    const double tol = detail::witness_tolerance(cert.witness);
    r.witness_boundary_distance = std::max(tube[j].distance_to_closure(cert.witness), std::max(0.0, tube[j].depth(cert.witness)));
    r.witness = tube[j].on_boundary(cert.witness, tol) && contains(cert.regions[j], cert.witness, tol);
  }
  return r;
}

inline BpmReport check_bpm(const BpmCertificate& cert, const EuclideanIsometry& iso, const BoundedRegion& u,
                           std::size_t samples, std::uint64_t seed = 1) {
  return check_bpm(cert, FiniteBaseVortex({iso}, {0}), {u}, samples, seed);
}

/// check_bpm, raising a PropertyViolation named after the first failure.
template <class Map, class Tube>
BpmReport verify_bpm(const BpmCertificate& cert, const Map& map, const Tube& u, std::size_t samples,
                     std::uint64_t seed = 1) {
  const BpmReport r = check_bpm(cert, map, u, samples, seed);
  const std::string failed = r.first_failure();
  if (failed == "avoidance") throw PropertyViolation(failed, "a sample point of U lies in K");
  if (failed == "connectivity") throw PropertyViolation(failed, "K is not connected with infinity");
  if (failed == "invariance") throw PropertyViolation(failed, "K is not mapped onto itself");
  if (failed == "witness") {
    throw PropertyViolation(failed, "witness is " + std::to_string(r.witness_boundary_distance) +
                                        " from the boundary of U or outside K");
  }
  return r;
}

/// The isometries of v along the period-q orbit of 0 under x -> x + p/q.
inline FiniteBaseVortex periodic_sample(const VortexSpec& v, const Rational& angle) {
  const Integer q = denominator(angle);
  if (q > 100000) throw InputError("periodic approximation period too large");
  const auto period = q.convert_to<long>();
  std::vector<EuclideanIsometry> isos;
  for (long j = 0; j < period; ++j) {
    const double x = to_double(frac(angle * j));
    std::visit(
        [&](const auto& w) {
          using T = std::decay_t<decltype(w)>;
          if constexpr (std::is_same_v<T, RotationVortex>) {
            const Complex c = w.beta.phase();
            const Complex t = w.rho(x);
            Matrix psi(2, 2);
            psi << c.real(), -c.imag(), c.imag(), c.real();
            Vector rho(2);
            rho << t.real(), t.imag();
            isos.emplace_back(std::move(psi), std::move(rho));
          } else {
            isos.emplace_back(w.psi, translation_at(w, x));
          }
        },
        v);
  }
  return FiniteBaseVortex(std::move(isos));
}

struct PeriodicApproxRow {
  Rational angle;
  long q = 0;
  std::optional<SymbolicRegion> region;  // K over the base point 0
  std::string construction;
  std::string error;  // set when no set could be built for this period
  std::size_t window_points = 0;
};

struct PeriodicApproxTable {
  double window = 0;
  int grid = 0;
  std::vector<PeriodicApproxRow> rows;
  /// Hausdorff distances of K over 0 intersected with the window, on the
  /// grid; infinity when exactly one of the two traces is empty.
  std::vector<std::vector<double>> hausdorff;
};

namespace detail {

inline std::vector<Vector> window_trace(const SymbolicRegion& k, double window, int grid) {
  std::vector<Vector> out;
  const int l = k.dim();
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      Vector v = Vector::Zero(l);
      v[0] = -window + 2 * window * i / (grid - 1);
      v[1] = -window + 2 * window * j / (grid - 1);
      if (contains(k, v)) out.push_back(std::move(v));
    }
  }
  return out;
}

inline double hausdorff(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  if (a.empty() && b.empty()) return 0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const std::vector<Vector>& x, const std::vector<Vector>& y) {
    double worst = 0;
    for (const auto& p : x) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& r : y) best = std::min(best, (p - r).squaredNorm());
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace detail

/// For each p/q, the vortex sampled along the period-q orbit of 0 and its
/// invariant set over 0. Distances are measured in the plane of the first
/// two fiber coordinates, on a grid x grid lattice of [-window, window]^2;
/// window <= 0 picks 4 max(1, extent of U).
inline PeriodicApproxTable periodic_approx_experiment(const VortexSpec& v, const std::vector<Rational>& angles,
                                                      const BoundedRegion& u, double window = 0, int grid = 48) {
  if (grid < 2) throw InputError("periodic_approx_experiment needs grid >= 2");
  PeriodicApproxTable table;
  table.window = window > 0 ? window : 4 * std::max(1.0, u.extent());
  table.grid = grid;
  std::vector<std::vector<Vector>> traces;
  for (const Rational& angle : angles) {
    PeriodicApproxRow row;
    row.angle = frac(angle);
    row.q = denominator(row.angle).convert_to<long>();
    try {
      const FiniteBaseVortex f = periodic_sample(v, row.angle);
      const BpmCertificate cert = bpm_periodic(f, std::vector<BoundedRegion>(f.size(), u));
      row.region = cert.regions.front();
      row.construction = cert.construction;
    } catch (const InputError& e) {
      row.error = std::string(e.kind()) + ": " + e.what();
    }
    traces.push_back(row.region ? detail::window_trace(*row.region, table.window, grid) : std::vector<Vector>{});
    row.window_points = traces.back().size();
    table.rows.push_back(std::move(row));
  }
  const std::size_t n = traces.size();
  table.hausdorff.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      table.hausdorff[i][j] = table.hausdorff[j][i] = detail::hausdorff(traces[i], traces[j]);
    }
  }
  return table;
}

}  // namespace vortexlab
