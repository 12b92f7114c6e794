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

// The torus cascade lifting a rotation vortex.
//
// For F(x, z) = (x + alpha, e^{2 pi i beta} z + rho(x)) the lift is
//   G((x, y), z) = ((x + alpha, y - beta), z + chi(x, y)),
//   chi(x, y)    = e^{2 pi i (y - beta)} rho(x),
// and the proper map Pi((x, y), z) = (x, e^{-2 pi i y} z) satisfies
// F o Pi = Pi o G.

#pragma once

#include <utility>
#include <variant>

#include "vortexlab/trig_polynomial.hpp"
#include "vortexlab/vortex.hpp"

namespace vortexlab {

struct TorusPoint {
  double x = 0;
  double y = 0;
};

class LiftedCascade {
 public:
  LiftedCascade(Angle alpha, Angle minus_beta, BivariateTrigPolynomial chi)
      : alpha_(std::move(alpha)), minus_beta_(std::move(minus_beta)), chi_(std::move(chi)),
        dx_(alpha_.to_double()), dy_(minus_beta_.to_double()) {}

  /// Base rotation is (alpha, -beta).
  const Angle& alpha() const { return alpha_; }
  const Angle& minus_beta() const { return minus_beta_; }
  const BivariateTrigPolynomial& chi() const { return chi_; }
  Complex chi(const TorusPoint& p) const { return chi_(p.x, p.y); }

  TorusPoint base_step(const TorusPoint& p) const { return {wrap01(p.x + dx_), wrap01(p.y + dy_)}; }

  /// One step of G.
  std::pair<TorusPoint, Complex> step(const TorusPoint& p, Complex z) const {
    return {base_step(p), z + chi_(p.x, p.y)};
  }

  /// Birkhoff sum S_n(chi)(p).
  Complex birkhoff(const TorusPoint& p, long n) const {
    return birkhoff_sum([this](const TorusPoint& q) { return chi_(q.x, q.y); },
                        [this](const TorusPoint& q) { return base_step(q); }, n, p);
  }

 private:
  Angle alpha_;
  Angle minus_beta_;
  BivariateTrigPolynomial chi_;
  double dx_;
  double dy_;
};

inline LiftedCascade lift_cascade(const RotationVortex& v) {
  const Complex twist = (-v.beta).phase();
  BivariateTrigPolynomial::Terms terms;
  for (const auto& [n, c] : v.rho.terms()) terms[{n, 1}] = c * twist;
  return {v.alpha, -v.beta, BivariateTrigPolynomial(std::move(terms))};
}

inline LiftedCascade lift_cascade(const VortexSpec& v) {
  if (const auto* r = std::get_if<RotationVortex>(&v)) return lift_cascade(*r);
  throw UnsupportedError("lift_cascade needs a constant fiber rotation on C");
}

/// Pi((x, y), z) = (x, e^{-2 pi i y} z).
inline std::pair<double, Complex> factor_project(const TorusPoint& p, Complex z) {
  return {p.x, unit(-p.y) * z};
}

/// (x, y) -> <e^{2 pi i theta}, chi(x, y)>, the real cocycle over the
/// torus rotation (alpha, -beta) obtained by projecting chi on a direction.
struct ProjectedCocycle {
  Angle alpha;
  Angle minus_beta;
  BivariateTrigPolynomial f;  // real valued; evaluate and take .real()

  double operator()(double x, double y) const { return f(x, y).real(); }
};

inline ProjectedCocycle project_cocycle(const RotationVortex& v, const Angle& theta) {
  // Re(e^{-2 pi i theta} chi) = (w chi + conj(w chi)) / 2, w = e^{-2 pi i theta}.
  const Complex w = (-theta).phase() * (-v.beta).phase();
  BivariateTrigPolynomial::Terms terms;
  for (const auto& [n, c] : v.rho.terms()) {
    terms[{n, 1}] += 0.5 * w * c;
    terms[{-n, -1}] += 0.5 * std::conj(w * c);
  }
  return {v.alpha, -v.beta, BivariateTrigPolynomial(std::move(terms))};
}

}  // namespace vortexlab
