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

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "vortexlab/angle.hpp"
#include "vortexlab/errors.hpp"

namespace vortexlab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kOrthogonalityTolerance = 1e-12;

/// Counterclockwise rotation of the plane by `turns` full turns.
inline Matrix rotation2(double turns) {
  Matrix r(2, 2);
  const double c = std::cos(kTwoPi * turns), s = std::sin(kTwoPi * turns);
  r << c, -s, s, c;
  return r;
}

/// v -> linear * v + translation, with `linear` orthogonal.
class EuclideanIsometry {
 public:
  EuclideanIsometry() = default;

  EuclideanIsometry(Matrix linear, Vector translation)
      : linear_(std::move(linear)), translation_(std::move(translation)) {
    validate();
  }

  static EuclideanIsometry identity(int dim) {
    return {Matrix::Identity(dim, dim), Vector::Zero(dim)};
  }
  static EuclideanIsometry translation(Vector t) {
    const auto n = t.size();
    return {Matrix::Identity(n, n), std::move(t)};
  }
  /// Planar rotation by `turns` about `center`.
  static EuclideanIsometry rotation_about(const Vector& center, double turns) {
    Matrix r = rotation2(turns);
    Vector t = center - r * center;
    return {std::move(r), std::move(t)};
  }

  int dim() const { return static_cast<int>(translation_.size()); }
  const Matrix& linear() const { return linear_; }
  const Vector& translation() const { return translation_; }
  double determinant() const { return linear_.determinant(); }
  bool preserves_orientation() const { return determinant() > 0; }

  Vector operator()(const Vector& v) const {
    if (v.size() != translation_.size()) throw InputError("isometry applied to a vector of the wrong dimension");
    return linear_ * v + translation_;
  }

  /// (this o other)(v) = this(other(v)).
  EuclideanIsometry operator*(const EuclideanIsometry& other) const {
    if (other.dim() != dim()) throw InputError("composing isometries of different dimensions");
    return {linear_ * other.linear_, linear_ * other.translation_ + translation_};
  }

  EuclideanIsometry inverse() const {
    Matrix inv = linear_.transpose();
    Vector t = -(inv * translation_);
    return {std::move(inv), std::move(t)};
  }

  bool approx_equal(const EuclideanIsometry& o, double tol) const {
    return dim() == o.dim() && (linear_ - o.linear_).cwiseAbs().maxCoeff() <= tol &&
           (translation_ - o.translation_).cwiseAbs().maxCoeff() <= tol;
  }

 private:
  void validate() const {
    if (linear_.rows() != linear_.cols() || linear_.rows() != translation_.size()) {
      throw InputError("isometry: linear part must be square and match the translation dimension");
    }
    const auto n = linear_.rows();
    if (n == 0) throw InputError("isometry: zero-dimensional fiber");
    const double err = (linear_.transpose() * linear_ - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    // Compositions accumulate rounding; 1e-12 per factor is the contract, so
    // leave a little room for products built inside the library.
    if (err > 64 * kOrthogonalityTolerance) {
      throw InputError("isometry: linear part is not orthogonal (error " + std::to_string(err) + ")");
    }
    const double det = linear_.determinant();
    if (std::abs(std::abs(det) - 1.0) > 64 * kOrthogonalityTolerance) {
      throw InputError("isometry: determinant is not +-1");
    }
  }

  Matrix linear_;
  Vector translation_;
};

}  // namespace vortexlab
