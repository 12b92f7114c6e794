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


// Regions of a Euclidean fiber R^l.
//
// BoundedRegion is the open set U an invariant set has to avoid: a finite
// union of open balls and open boxes. SymbolicRegion describes the closed,
// unbounded sets K built around it, in a form where membership and the
// action of an isometry are computed on parameters.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <type_traits>
#include <variant>
#include <vector>

#include "vortexlab/errors.hpp"
#include "vortexlab/isometry.hpp"

namespace vortexlab {

/// Open ball.
struct Disk {
  Vector center;
  double radius = 0;
};

/// Open box frame({lo < u < hi}). Input boxes are axis aligned; images of
/// boxes under isometries keep the rotated frame.
struct Box {
  EuclideanIsometry frame;
  Vector lo;
  Vector hi;
};

/// An extremal value over the closure of a region, with a point attaining it.
struct Extremal {
  double value = -std::numeric_limits<double>::infinity();
  Vector point;
};

class BoundedRegion {
 public:
  BoundedRegion() = default;
  explicit BoundedRegion(int dim) : dim_(dim) {}

  static BoundedRegion disk(Vector center, double radius) {
    BoundedRegion r(static_cast<int>(center.size()));
    r.add_disk(std::move(center), radius);
    return r;
  }
  static BoundedRegion box(Vector lo, Vector hi) {
    BoundedRegion r(static_cast<int>(lo.size()));
    r.add_box(std::move(lo), std::move(hi));
    return r;
  }

  void add_disk(Vector center, double radius) {
    claim_dim(center.size());
    if (!std::isfinite(radius) || radius <= 0 || !center.allFinite()) {
      throw InputError("disk needs a finite center and a positive radius");
    }
    disks_.push_back({std::move(center), radius});
  }

  void add_box(Vector lo, Vector hi) {
    const auto n = lo.size();
    add_box(EuclideanIsometry::identity(static_cast<int>(n)), std::move(lo), std::move(hi));
  }

  void add_box(EuclideanIsometry frame, Vector lo, Vector hi) {
    claim_dim(lo.size());
    if (hi.size() != lo.size() || frame.dim() != lo.size()) throw InputError("box corners must share one dimension");
    if (!lo.allFinite() || !hi.allFinite() || (hi - lo).minCoeff() <= 0) {
      throw InputError("box needs finite corners with lo < hi in every coordinate");
    }
    boxes_.push_back({std::move(frame), std::move(lo), std::move(hi)});
  }

  int dim() const { return dim_; }
  bool empty() const { return disks_.empty() && boxes_.empty(); }
  const std::vector<Disk>& disks() const { return disks_; }
  const std::vector<Box>& boxes() const { return boxes_; }

  bool contains(const Vector& v) const { return depth(v) > 0; }

  /// Signed depth: positive inside, the largest over pieces of the distance
  /// to that piece's boundary (negative or -inf outside every piece).
  double depth(const Vector& v) const {
    check(v);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& d : disks_) best = std::max(best, d.radius - (v - d.center).norm());
    for (const auto& b : boxes_) {
      const Vector u = b.frame.inverse()(v);
      best = std::max(best, std::min((u - b.lo).minCoeff(), (b.hi - u).minCoeff()));
    }
    return best;
  }

  double distance_to_closure(const Vector& v) const {
    check(v);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& d : disks_) best = std::min(best, std::max(0.0, (v - d.center).norm() - d.radius));
    for (const auto& b : boxes_) {
      const Vector u = b.frame.inverse()(v);
      best = std::min(best, (u - u.cwiseMax(b.lo).cwiseMin(b.hi)).norm());
    }
    return best;
  }

  /// Within `tol` of the closure and not deeper than `tol` inside.
  bool on_boundary(const Vector& v, double tol) const {
    return distance_to_closure(v) <= tol && depth(v) <= tol;
  }

  /// max of <direction, v> over the closure.
  Extremal support(const Vector& direction) const {
    check(direction);
    Extremal best;
    const double norm = direction.norm();
    if (norm == 0) throw InputError("support needs a nonzero direction");
    for (const auto& d : disks_) {
      const double value = direction.dot(d.center) + d.radius * norm;
      if (value > best.value) best = {value, d.center + (d.radius / norm) * direction};
    }
    for (const auto& b : boxes_) {
      const Vector local = b.frame.linear().transpose() * direction;
      Vector corner(local.size());
      for (Eigen::Index i = 0; i < local.size(); ++i) corner[i] = local[i] >= 0 ? b.hi[i] : b.lo[i];
      const Vector point = b.frame(corner);
      const double value = direction.dot(point);
      if (value > best.value) best = {value, point};
    }
    return best;
  }

  /// max over the closure of |basis^T v - center|, where `basis` has
  /// orthonormal columns spanning the plane the region is projected on.
  Extremal farthest(const Matrix& basis, const Vector& center) const {
    if (basis.rows() != dim_ || basis.cols() != center.size()) throw InputError("farthest: basis shape mismatch");
    Extremal best;
    for (const auto& d : disks_) {
      const Vector offset = basis.transpose() * d.center - center;
      const double n = offset.norm();
      const Vector dir = n > 0 ? Vector(basis * (offset / n)) : Vector(basis.col(0));
      const double value = n + d.radius;
      if (value > best.value) best = {value, d.center + d.radius * dir};
    }
    for (const auto& b : boxes_) {
      const auto l = static_cast<int>(b.lo.size());
      if (l > 24) throw UnsupportedError("farthest: box dimension too large for corner enumeration");
      for (unsigned long mask = 0; mask < (1UL << l); ++mask) {
        Vector corner(l);
        for (int i = 0; i < l; ++i) corner[i] = (mask >> i) & 1UL ? b.hi[i] : b.lo[i];
        const Vector point = b.frame(corner);
        const double value = (basis.transpose() * point - center).norm();
        if (value > best.value) best = {value, point};
      }
    }
    return best;
  }

  Extremal farthest(const Vector& center) const {
    return farthest(Matrix::Identity(dim_, dim_), center);
  }

  BoundedRegion image(const EuclideanIsometry& iso) const {
    BoundedRegion out(dim_);
    for (const auto& d : disks_) out.disks_.push_back({iso(d.center), d.radius});
    for (const auto& b : boxes_) out.boxes_.push_back({iso * b.frame, b.lo, b.hi});
    return out;
  }

  BoundedRegion& merge(const BoundedRegion& o) {
    if (o.empty()) return *this;
    claim_dim(o.dim_);
    disks_.insert(disks_.end(), o.disks_.begin(), o.disks_.end());
    boxes_.insert(boxes_.end(), o.boxes_.begin(), o.boxes_.end());
    return *this;
  }

  /// Largest norm of a point of the closure.
  double extent() const {
    if (empty()) return 0;
    return farthest(Vector::Zero(dim_)).value;
  }

  /// Points of the open region, spread over the pieces in turn. Points are
  /// kept a relative 1e-6 away from piece boundaries.
  std::vector<Vector> sample(std::size_t count, std::mt19937_64& rng) const {
    if (empty()) throw InputError("cannot sample an empty region");
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss;
    const std::size_t pieces = disks_.size() + boxes_.size();
    std::vector<Vector> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t k = i % pieces;
      if (k < disks_.size()) {
        const auto& d = disks_[k];
        Vector dir(dim_);
        for (int j = 0; j < dim_; ++j) dir[j] = gauss(rng);
        if (dir.norm() == 0) dir[0] = 1;
        const double r = d.radius * (1 - 1e-6) * std::pow(unif(rng), 1.0 / dim_);
        out.push_back(d.center + r * dir.normalized());
      } else {
        const auto& b = boxes_[k - disks_.size()];
        Vector u(dim_);
        for (int j = 0; j < dim_; ++j) {
          const double margin = 1e-6 * (b.hi[j] - b.lo[j]);
          u[j] = b.lo[j] + margin + (b.hi[j] - b.lo[j] - 2 * margin) * unif(rng);
        }
        out.push_back(b.frame(u));
      }
    }
    return out;
  }

 private:
  void claim_dim(Eigen::Index n) {
    if (n < 1) throw InputError("region pieces need dimension >= 1");
    if (dim_ == 0) dim_ = static_cast<int>(n);
    if (dim_ != n) throw InputError("region pieces must share one dimension");
  }
  void check(const Vector& v) const {
    if (v.size() != dim_) throw InputError("point dimension does not match the region");
  }

  int dim_ = 0;
  std::vector<Disk> disks_;
  std::vector<Box> boxes_;
};

class SymbolicRegion;

/// {<normal, v> <= low} u {<normal, v> >= high}, normal a unit vector.
struct BandComplement {
  Vector normal;
  double low = 0;
  double high = 0;
};

/// {|v - center| >= radius}.
struct BallComplement {
  Vector center;
  double radius = 0;
};

/// {v : basis^T v in base}. `basis` is l x m with orthonormal columns, so
/// the set is base times the full orthogonal complement of its span.
struct ProductWithFullFactor {
  std::shared_ptr<const SymbolicRegion> base;
  Matrix basis;
};

struct RegionImage {
  EuclideanIsometry isometry;
  std::shared_ptr<const SymbolicRegion> inner;
};

struct RegionUnion {
  std::vector<SymbolicRegion> members;
};

class SymbolicRegion {
 public:
  using Node = std::variant<BandComplement, BallComplement, ProductWithFullFactor, RegionImage, RegionUnion>;

  SymbolicRegion(BandComplement b) : node_(std::move(b)) {
    auto& band = std::get<BandComplement>(node_);
    const double n = band.normal.norm();
    if (n == 0 || !band.normal.allFinite()) throw InputError("band needs a nonzero normal");
    band.normal /= n;
    band.low /= n;
    band.high /= n;
    if (!(band.low <= band.high)) throw InputError("band needs low <= high");
  }
  SymbolicRegion(BallComplement b) : node_(std::move(b)) {
    const auto& ball = std::get<BallComplement>(node_);
    if (!(ball.radius >= 0) || !std::isfinite(ball.radius)) throw InputError("ball complement needs radius >= 0");
  }
  SymbolicRegion(ProductWithFullFactor p) : node_(std::move(p)) {
    const auto& prod = std::get<ProductWithFullFactor>(node_);
    if (!prod.base) throw InputError("product needs a base region");
    const Matrix gram = prod.basis.transpose() * prod.basis;
    if (prod.basis.cols() != prod.base->dim() || prod.basis.cols() > prod.basis.rows() ||
        (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > 1e-10) {
      throw InputError("product basis must have orthonormal columns matching the base dimension");
    }
  }
  SymbolicRegion(RegionImage i) : node_(std::move(i)) {
    const auto& img = std::get<RegionImage>(node_);
    if (!img.inner || img.inner->dim() != img.isometry.dim()) throw InputError("image dimension mismatch");
  }
  SymbolicRegion(RegionUnion u) : node_(std::move(u)) {
    const auto& uni = std::get<RegionUnion>(node_);
    if (uni.members.empty()) throw InputError("union needs at least one member");
    for (const auto& m : uni.members) {
      if (m.dim() != uni.members.front().dim()) throw InputError("union members must share one dimension");
    }
  }

  const Node& node() const { return node_; }

  int dim() const {
    return std::visit(
        [](const auto& n) -> int {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, BandComplement>) return static_cast<int>(n.normal.size());
          else if constexpr (std::is_same_v<T, BallComplement>) return static_cast<int>(n.center.size());
          else if constexpr (std::is_same_v<T, ProductWithFullFactor>) return static_cast<int>(n.basis.rows());
          else if constexpr (std::is_same_v<T, RegionImage>) return n.isometry.dim();
          else return n.members.front().dim();
        },
        node_);
  }

  std::string kind() const {
    static const char* names[] = {"band-complement", "ball-complement", "product", "image", "union"};
    return names[node_.index()];
  }

 private:
  Node node_;
};

/// Closed membership, relaxed by `slack` toward the outside.
inline bool contains(const SymbolicRegion& k, const Vector& v, double slack = 0) {
  if (v.size() != k.dim()) throw InputError("point dimension does not match the region");
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BandComplement>) {
          const double d = n.normal.dot(v);
          return d <= n.low + slack || d >= n.high - slack;
        } else if constexpr (std::is_same_v<T, BallComplement>) {
          return (v - n.center).norm() >= n.radius - slack;
        } else if constexpr (std::is_same_v<T, ProductWithFullFactor>) {
          return contains(*n.base, n.basis.transpose() * v, slack);
        } else if constexpr (std::is_same_v<T, RegionImage>) {
          return contains(*n.inner, n.isometry.inverse()(v), slack);
        } else {
          return std::any_of(n.members.begin(), n.members.end(),
                             [&](const SymbolicRegion& m) { return contains(m, v, slack); });
        }
      },
      k.node());
}

/// iso(K), with the isometry pushed into the parameters of every
/// primitive, so the result has no RegionImage nodes.
inline SymbolicRegion image(const EuclideanIsometry& iso, const SymbolicRegion& k) {
  if (iso.dim() != k.dim()) throw InputError("image: isometry and region dimensions differ");
  return std::visit(
      [&](const auto& n) -> SymbolicRegion {
        using T = std::decay_t<decltype(n)>;
        const Matrix& psi = iso.linear();
        const Vector& rho = iso.translation();
        if constexpr (std::is_same_v<T, BandComplement>) {
          // <n, iso^{-1} v> = <psi n, v> - <psi n, rho>.
          const Vector normal = psi * n.normal;
          const double shift = normal.dot(rho);
          return BandComplement{normal, n.low + shift, n.high + shift};
        } else if constexpr (std::is_same_v<T, BallComplement>) {
          return BallComplement{iso(n.center), n.radius};
        } else if constexpr (std::is_same_v<T, ProductWithFullFactor>) {
          // basis'^T (v - rho) in base, basis' = psi basis.
          Matrix basis = psi * n.basis;
          Vector shift = basis.transpose() * rho;
          auto base = std::make_shared<const SymbolicRegion>(image(EuclideanIsometry::translation(shift), *n.base));
          return ProductWithFullFactor{std::move(base), std::move(basis)};
        } else if constexpr (std::is_same_v<T, RegionImage>) {
          return image(iso * n.isometry, *n.inner);
        } else {
          RegionUnion out;
          for (const auto& m : n.members) out.members.push_back(image(iso, m));
          return out;
        }
      },
      k.node());
}

/// Pushes RegionImage nodes into the primitives.
inline SymbolicRegion resolve(const SymbolicRegion& k) {
  return image(EuclideanIsometry::identity(k.dim()), k);
}

namespace detail {

inline double scale_of(double a, double b) { return std::max({1.0, std::abs(a), std::abs(b)}); }

inline void flatten(const SymbolicRegion& k, std::vector<SymbolicRegion>& out) {
  if (const auto* u = std::get_if<RegionUnion>(&k.node())) {
    for (const auto& m : u->members) flatten(m, out);
  } else {
    out.push_back(k);
  }
}

}  // namespace detail

/// Set equality decided on parameters, up to relative tolerance `tol`.
/// Both arguments are resolved first. Unions compare as sets of members;
/// a product only matches a product over the same span.
inline bool equivalent(const SymbolicRegion& a, const SymbolicRegion& b, double tol = 1e-9) {
  if (a.dim() != b.dim()) return false;
  std::vector<SymbolicRegion> as, bs;
  detail::flatten(resolve(a), as);
  detail::flatten(resolve(b), bs);
  if (as.size() > 1 || bs.size() > 1) {
    auto covered = [tol](const std::vector<SymbolicRegion>& xs, const std::vector<SymbolicRegion>& ys) {
      return std::all_of(xs.begin(), xs.end(), [&](const SymbolicRegion& x) {
        return std::any_of(ys.begin(), ys.end(), [&](const SymbolicRegion& y) { return equivalent(x, y, tol); });
      });
    };
    return covered(as, bs) && covered(bs, as);
  }
  const auto& x = as.front().node();
  const auto& y = bs.front().node();
  if (const auto* p = std::get_if<BandComplement>(&x)) {
    const auto* q = std::get_if<BandComplement>(&y);
    if (!q) return false;
    const double dot = p->normal.dot(q->normal);
    const double s = detail::scale_of(p->low, p->high);
    if (std::abs(dot - 1) <= tol) return std::abs(p->low - q->low) <= tol * s && std::abs(p->high - q->high) <= tol * s;
    if (std::abs(dot + 1) <= tol) return std::abs(p->low + q->high) <= tol * s && std::abs(p->high + q->low) <= tol * s;
    return false;
  }
  if (const auto* p = std::get_if<BallComplement>(&x)) {
    const auto* q = std::get_if<BallComplement>(&y);
    if (!q) return false;
    const double s = detail::scale_of(p->center.norm(), p->radius);
    return (p->center - q->center).norm() <= tol * s && std::abs(p->radius - q->radius) <= tol * s;
  }
  const auto* p = std::get_if<ProductWithFullFactor>(&x);
  const auto* q = std::get_if<ProductWithFullFactor>(&y);
  if (!p || !q || p->basis.cols() != q->basis.cols()) return false;
  if ((p->basis * (p->basis.transpose() * q->basis) - q->basis).cwiseAbs().maxCoeff() > tol) return false;
  // q->basis^T v = R^T p->basis^T v with R = p->basis^T q->basis.
  const Matrix r = p->basis.transpose() * q->basis;
  const auto m = r.rows();
  return equivalent(*p->base, image(EuclideanIsometry(r, Vector::Zero(m)), *q->base), tol);
}

/// Resolved form with nested unions flattened and equivalent members merged.
inline SymbolicRegion simplify(const SymbolicRegion& k, double tol = 1e-9) {
  std::vector<SymbolicRegion> flat, kept;
  detail::flatten(resolve(k), flat);
  for (auto& m : flat) {
    if (std::none_of(kept.begin(), kept.end(), [&](const SymbolicRegion& x) { return equivalent(x, m, tol); })) {
      kept.push_back(std::move(m));
    }
  }
  if (kept.size() == 1) return kept.front();
  return RegionUnion{std::move(kept)};
}

/// Connectedness of K together with the point at infinity, read off the
/// constructors: every primitive is unbounded in each of its components,
/// products with a full factor keep that, images are homeomorphic, and a
/// union of sets each connected with infinity is connected with infinity
/// because they all share it.
inline bool connected_with_infinity(const SymbolicRegion& k) {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BandComplement>) return n.low <= n.high;
        else if constexpr (std::is_same_v<T, BallComplement>) return n.radius >= 0 && n.center.allFinite();
        else if constexpr (std::is_same_v<T, ProductWithFullFactor>) return connected_with_infinity(*n.base);
        else if constexpr (std::is_same_v<T, RegionImage>) return connected_with_infinity(*n.inner);
        else {
          return std::all_of(n.members.begin(), n.members.end(),
                             [](const SymbolicRegion& m) { return connected_with_infinity(m); });
        }
      },
      k.node());
}

namespace detail {

inline Vector sample_point(const SymbolicRegion& k, std::mt19937_64& rng, double scale, bool on_boundary) {
  const int l = k.dim();
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> gauss;
  auto gaussian = [&](int n) {
    Vector g(n);
    for (int i = 0; i < n; ++i) g[i] = gauss(rng);
    return g;
  };
  const double depth = on_boundary ? 0.0 : unif(rng) * scale;
  return std::visit(
      [&](const auto& n) -> Vector {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BandComplement>) {
          const double t = unif(rng) < 0.5 ? n.high + depth : n.low - depth;
          Vector g = gaussian(l);
          g -= n.normal.dot(g) * n.normal;
          return t * n.normal + scale * g;
        } else if constexpr (std::is_same_v<T, BallComplement>) {
          Vector g = gaussian(l);
          if (g.norm() == 0) g[0] = 1;
          return n.center + (n.radius + depth) * g.normalized();
        } else if constexpr (std::is_same_v<T, ProductWithFullFactor>) {
          const Vector base = sample_point(*n.base, rng, scale, on_boundary);
          Vector g = gaussian(l);
          g -= n.basis * (n.basis.transpose() * g);
          return n.basis * base + scale * g;
        } else if constexpr (std::is_same_v<T, RegionImage>) {
          return n.isometry(sample_point(*n.inner, rng, scale, on_boundary));
        } else {
          const auto pick = static_cast<std::size_t>(unif(rng) * static_cast<double>(n.members.size()));
          return sample_point(n.members[std::min(pick, n.members.size() - 1)], rng, scale, on_boundary);
        }
      },
      k.node());
}

}  // namespace detail

/// Points of K spread over a shell of width `scale` beyond its boundary;
/// every eighth point lies on the boundary itself.
inline std::vector<Vector> sample(const SymbolicRegion& k, std::size_t count, std::mt19937_64& rng, double scale) {
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(detail::sample_point(k, rng, scale, i % 8 == 0));
  return out;
}

}  // namespace vortexlab
