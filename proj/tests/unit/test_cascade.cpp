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


#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "vortexlab/cascade.hpp"

namespace vortexlab {
namespace {

using testing::random_trig;

TEST(Lift, ZeroCocycleIsATorusRotation) {
  const LiftedCascade g = lift_cascade(RotationVortex{Angle::exact(1, 7), Angle::exact(2, 9), {}});
  EXPECT_TRUE(g.chi().terms().empty());
  EXPECT_EQ(g.minus_beta(), Angle::exact(7, 9));
}

TEST(Lift, ConstantCocycle) {
  const Angle beta = Angle::exact(2, 9);
  const LiftedCascade g = lift_cascade(RotationVortex{Angle::exact(1, 7), beta, TrigPolynomial::constant(1.0)});
  for (double y : {0.0, 0.3}) EXPECT_LT(std::abs(g.chi({0.4, y}) - unit(y - 2.0 / 9)), 1e-14);
  // rho_1(0) = e^{2 pi i beta} chi(0, 0) = 1.
  EXPECT_LT(std::abs(beta.phase() * g.chi({0, 0}) - 1.0), 1e-14);
}

TEST(Lift, RejectsMatrixFibers) {
  const VortexSpec v = MatrixVortex{Angle::exact(1, 3), Matrix::Identity(2, 2), {TrigPolynomial(), TrigPolynomial()}};
  EXPECT_THROW(lift_cascade(v), UnsupportedError);
}

// rho_n(x) = e^{2 pi i n beta} S_n(chi)(x, 0).
TEST(Lift, BirkhoffIdentity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const RotationVortex v{Angle::from_double(unif(rng)), Angle::from_double(unif(rng)), random_trig(rng, 5)};
    const LiftedCascade g = lift_cascade(v);
    const double x = unif(rng);
    for (long n : {1L, 2L, 17L, 100L, 1000L}) {
      const Complex lhs = cocycle(v, n, x).translation;
      const Complex rhs = v.beta.times(n).phase() * g.birkhoff({x, 0.0}, n);
      EXPECT_LT(std::abs(lhs - rhs), 1e-10) << "n = " << n;
    }
  }
}

TEST(FactorProject, Examples) {
  const auto [x0, z0] = factor_project({0.3, 0.0}, Complex(1, 2));
  EXPECT_EQ(x0, 0.3);
  EXPECT_LT(std::abs(z0 - Complex(1, 2)), 1e-15);
  const auto [x1, z1] = factor_project({0.3, 0.5}, Complex(1, 2));
  EXPECT_LT(std::abs(z1 + Complex(1, 2)), 1e-15);
}

// F o Pi = Pi o G.
TEST(FactorProject, Semiconjugacy) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const RotationVortex v{Angle::from_double(unif(rng)), Angle::from_double(unif(rng)), random_trig(rng, 6)};
  const LiftedCascade g = lift_cascade(v);
  for (int i = 0; i < 200; ++i) {
    const TorusPoint p{unif(rng), unif(rng)};
    const Complex z(unif(rng) - 0.5, unif(rng) - 0.5);
    const auto [gp, gz] = g.step(p, z);
    const auto [px, pz] = factor_project(gp, gz);
    const auto [qx, qz] = factor_project(p, z);
    const double fx = wrap01(qx + v.alpha.to_double());
    const Complex fz = v.beta.phase() * qz + v.rho(qx);
    EXPECT_LT(circle_distance(px, fx), 1e-12);
    EXPECT_LT(std::abs(pz - fz), 1e-12);
  }
}

TEST(ProjectCocycle, Examples) {
  std::mt19937_64 rng(9);
  const RotationVortex v{Angle::exact(2, 11), Angle::exact(1, 6), random_trig(rng, 3)};
  const LiftedCascade g = lift_cascade(v);
  const ProjectedCocycle re = project_cocycle(v, Angle::exact(0, 1));
  const ProjectedCocycle im = project_cocycle(v, Angle::exact(1, 4));
  for (double x : {0.1, 0.55}) {
    for (double y : {0.0, 0.7}) {
      EXPECT_NEAR(re(x, y), g.chi({x, y}).real(), 1e-13);
      EXPECT_NEAR(im(x, y), g.chi({x, y}).imag(), 1e-13);
    }
  }
  const RotationVortex one{Angle::exact(2, 11), Angle::exact(1, 6), TrigPolynomial::constant(1.0)};
  EXPECT_NEAR(project_cocycle(one, Angle{})(0.0, 1.0 / 6), 1.0, 1e-14);
}

}  // namespace
}  // namespace vortexlab
