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

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "vortexlab/bpm.hpp"

namespace vortexlab {
namespace {

using testing::mat;
using testing::random_orthogonal;
using testing::vec;

const BoundedRegion kUnitDisk = BoundedRegion::disk(vec({0, 0}), 1);

void expect_ok(const BpmCertificate& c, const EuclideanIsometry& iso, const BoundedRegion& u) {
  const BpmReport r = check_bpm(c, iso, u, 2000);
  EXPECT_TRUE(r.ok()) << "first failure: " << r.first_failure();
}

TEST(NormalForm, Translation) {
  const NormalForm nf = normal_form(EuclideanIsometry::translation(vec({2, -1})));
  EXPECT_EQ(nf.kind, NormalForm::Kind::Translation);
  EXPECT_NEAR((nf.translation - vec({2, -1})).norm(), 0, 1e-15);
}

TEST(NormalForm, HalfTurnCenterIsHalfTheTranslation) {
  const EuclideanIsometry iso(mat({{-1, 0}, {0, -1}}), vec({4, 2}));
  const NormalForm nf = normal_form(iso);
  ASSERT_EQ(nf.kind, NormalForm::Kind::RotationAboutPoint);
  EXPECT_NEAR((nf.center - vec({2, 1})).norm(), 0, 1e-12);
  EXPECT_NEAR(nf.angle, 0.5, 1e-12);
}

TEST(NormalForm, RotationAboutPointRecoversCenterAndAngle) {
  const NormalForm nf = normal_form(EuclideanIsometry::rotation_about(vec({3, -2}), 0.125));
  ASSERT_EQ(nf.kind, NormalForm::Kind::RotationAboutPoint);
  EXPECT_NEAR((nf.center - vec({3, -2})).norm(), 0, 1e-12);
  EXPECT_NEAR(nf.angle, 0.125, 1e-12);
}

TEST(NormalForm, ReflectionIsGlideWithTranslationSquare) {
  const NormalForm nf = normal_form(EuclideanIsometry(mat({{1, 0}, {0, -1}}), vec({1, 0})));
  ASSERT_EQ(nf.kind, NormalForm::Kind::GlideOrReversing);
  ASSERT_TRUE(nf.square);
  EXPECT_EQ(nf.square->kind, NormalForm::Kind::Translation);
  EXPECT_NEAR((nf.square->translation - vec({2, 0})).norm(), 0, 1e-12);
}

TEST(NormalForm, BlockDecompositionIsOrthonormal) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int l = 3 + trial % 3;
    Matrix q = random_orthogonal(rng, l);
    if (q.determinant() < 0) q.col(0) *= -1;
    const NormalForm nf = normal_form(EuclideanIsometry(q, Vector::Random(l)));
    if (nf.kind != NormalForm::Kind::BlockDecomposition) continue;
    EXPECT_NEAR((nf.basis.transpose() * nf.basis - Matrix::Identity(l, l)).cwiseAbs().maxCoeff(), 0, 1e-10);
    // Each rotation block spans an invariant plane.
    for (const auto& b : nf.blocks) {
      const Matrix cols = nf.basis.middleCols(b.first, b.size);
      const Matrix moved = q * cols;
      EXPECT_NEAR((moved - cols * (cols.transpose() * moved)).norm(), 0, 1e-9);
    }
  }
}

TEST(NormalForm, RejectsLineFiber) {
  EXPECT_THROW(normal_form(EuclideanIsometry::translation(vec({1}))), InputError);
}

TEST(BpmPlanar, TranslationGivesTangentBand) {
  const auto iso = EuclideanIsometry::translation(vec({1, 0}));
  const BpmCertificate c = bpm_planar(iso, kUnitDisk);
  EXPECT_EQ(c.construction, "translation-band");
  const auto& band = std::get<BandComplement>(c.region().node());
  EXPECT_NEAR(std::abs(band.normal[1]), 1, 1e-15);
  EXPECT_NEAR(band.high - band.low, 2, 1e-12);
  EXPECT_NEAR(c.witness.norm(), 1, 1e-12);
  EXPECT_NEAR(std::abs(c.witness[1]), 1, 1e-12);
  expect_ok(c, iso, kUnitDisk);
}

TEST(BpmPlanar, RotationGivesBallThroughFarthestPoint) {
  const auto iso = EuclideanIsometry::rotation_about(vec({0, 0}), 1.0 / 6);
  const auto u = BoundedRegion::disk(vec({3, 0}), 2);
  const BpmCertificate c = bpm_planar(iso, u);
  EXPECT_EQ(c.construction, "rotation-ball");
  const auto& ball = std::get<BallComplement>(c.region().node());
  EXPECT_NEAR(ball.center.norm(), 0, 1e-12);
  EXPECT_NEAR(ball.radius, 5, 1e-12);
  EXPECT_NEAR((c.witness - vec({5, 0})).norm(), 0, 1e-12);
  expect_ok(c, iso, u);
}

TEST(BpmPlanar, GlideUsesSquareLemma) {
  const EuclideanIsometry iso(mat({{1, 0}, {0, -1}}), vec({1, 0}));
  const BpmCertificate c = bpm_planar(iso, kUnitDisk);
  EXPECT_EQ(c.construction.rfind("square-lemma", 0), 0u) << c.construction;
  EXPECT_NEAR(c.witness.norm(), 1, 1e-12);
  expect_ok(c, iso, kUnitDisk);
}

TEST(BpmPlanar, ReflectionThroughLineUsesInvolutionBranch) {
  const EuclideanIsometry iso(mat({{1, 0}, {0, -1}}), vec({0, 0}));
  const auto u = BoundedRegion::disk(vec({0.5, 0.5}), 1);
  const BpmCertificate c = bpm_planar(iso, u);
  expect_ok(c, iso, u);
}

TEST(BpmPlanar, IdentityIsDegenerate) {
  EXPECT_THROW(bpm_planar(EuclideanIsometry::identity(2), kUnitDisk), DegenerateError);
}

TEST(BpmPlanar, RejectsEmptyRegionAndWrongDimension) {
  EXPECT_THROW(bpm_planar(EuclideanIsometry::translation(vec({1, 0})), BoundedRegion(2)), InputError);
  EXPECT_THROW(bpm_planar(EuclideanIsometry::translation(vec({1, 0, 0})), kUnitDisk), InputError);
}

TEST(BpmPlanar, RandomIsometriesAndRegionsSatisfyAllProperties) {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> coord(-3, 3), radius(0.2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const Matrix q = random_orthogonal(rng, 2);
    const EuclideanIsometry iso(q, vec({coord(rng), coord(rng)}));
    BoundedRegion u = BoundedRegion::disk(vec({coord(rng), coord(rng)}), radius(rng));
    if (trial % 2) u.add_box(vec({coord(rng), coord(rng)}), vec({4, 4}));
    const BpmCertificate c = bpm_planar(iso, u);
    const BpmReport r = check_bpm(c, iso, u, 500, trial);
    EXPECT_TRUE(r.ok()) << "trial " << trial << " " << c.construction << ": " << r.first_failure();
  }
}

TEST(BpmHighdim, RotationPlusAxisTranslationIsProductOfBall) {
  const EuclideanIsometry iso(mat({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}), vec({1, 0, 2}));
  const auto u = BoundedRegion::disk(vec({0, 0, 0}), 1);
  const BpmCertificate c = bpm_highdim(iso, u);
  EXPECT_EQ(c.construction, "product(rotation-ball)");
  const auto& prod = std::get<ProductWithFullFactor>(c.region().node());
  EXPECT_EQ(prod.basis.rows(), 3);
  EXPECT_EQ(prod.basis.cols(), 2);
  // The rotation plane is the xy plane.
  EXPECT_NEAR(std::abs(prod.basis(2, 0)) + std::abs(prod.basis(2, 1)), 0, 1e-12);
  expect_ok(c, iso, u);
}

TEST(BpmHighdim, PureTranslationIsProductOfBand) {
  const auto iso = EuclideanIsometry::translation(vec({0, 0, 1}));
  const auto u = BoundedRegion::disk(vec({0, 0, 0}), 1);
  const BpmCertificate c = bpm_highdim(iso, u);
  EXPECT_EQ(c.construction, "product(translation-band)");
  expect_ok(c, iso, u);
}

TEST(BpmHighdim, TwoRotationBlocksInFourDimensions) {
  Matrix psi = Matrix::Zero(4, 4);
  psi.topLeftCorner(2, 2) = rotation2(0.25);
  psi.bottomRightCorner(2, 2) = rotation2(0.1);
  const EuclideanIsometry iso(psi, vec({1, 2, 3, 4}));
  BoundedRegion u = BoundedRegion::disk(vec({0, 0, 0, 0}), 1);
  u.add_box(vec({1, 1, 1, 1}), vec({2, 3, 2, 3}));
  const BpmCertificate c = bpm(iso, u);
  EXPECT_EQ(c.construction, "product(rotation-ball)");
  expect_ok(c, iso, u);
}

TEST(BpmHighdim, RandomIsometriesSatisfyAllProperties) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> coord(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const int l = 3 + trial % 3;
    const EuclideanIsometry iso(random_orthogonal(rng, l), Vector::NullaryExpr(l, [&] { return coord(rng); }));
    const auto u = BoundedRegion::disk(Vector::NullaryExpr(l, [&] { return coord(rng); }), 1.5);
    const BpmCertificate c = bpm(iso, u);
    const BpmReport r = check_bpm(c, iso, u, 400, trial);
    EXPECT_TRUE(r.ok()) << "trial " << trial << " " << c.construction << ": " << r.first_failure();
  }
}

TEST(BpmHighdim, RejectsPlanarInput) {
  EXPECT_THROW(bpm_highdim(EuclideanIsometry::translation(vec({1, 0})), kUnitDisk), InputError);
}

FiniteBaseVortex translate_then_flip() {
  return FiniteBaseVortex({EuclideanIsometry::translation(vec({1, 0})),
                           EuclideanIsometry(mat({{-1, 0}, {0, -1}}), vec({0, 0}))});
}

TEST(BpmPeriodic, PeriodTwoBallsAreExact) {
  const FiniteBaseVortex v = translate_then_flip();
  const std::vector<BoundedRegion> tube(2, kUnitDisk);
  const BpmCertificate c = bpm_periodic(v, tube);
  EXPECT_EQ(c.construction, "cycle(rotation-ball)");
  ASSERT_EQ(c.regions.size(), 2u);
  const auto& k0 = std::get<BallComplement>(c.regions[0].node());
  const auto& k1 = std::get<BallComplement>(c.regions[1].node());
  EXPECT_NEAR((k0.center - vec({-0.5, 0})).norm(), 0, 1e-12);
  EXPECT_NEAR((k1.center - vec({0.5, 0})).norm(), 0, 1e-12);
  EXPECT_NEAR(k0.radius, 1.5, 1e-12);
  EXPECT_NEAR(k1.radius, 1.5, 1e-12);
  EXPECT_EQ(c.witness_fiber, 0u);
  EXPECT_NEAR((c.witness - vec({1, 0})).norm(), 0, 1e-12);
  EXPECT_TRUE(check_bpm(c, v, tube, 2000).ok());
}

TEST(BpmPeriodic, SharedRotationGivesOneBallComplement) {
  const auto rot = EuclideanIsometry::rotation_about(vec({0, 0}), 0.1);
  const FiniteBaseVortex v({rot, rot, rot});
  const std::vector<BoundedRegion> tube{BoundedRegion::disk(vec({1, 0}), 0.5), BoundedRegion::disk(vec({0, 2}), 0.5),
                                        BoundedRegion::disk(vec({-1, -1}), 0.25)};
  const BpmCertificate c = bpm_periodic(v, tube);
  for (std::size_t j = 1; j < 3; ++j) EXPECT_TRUE(equivalent(c.regions[0], c.regions[j])) << j;
  EXPECT_TRUE(check_bpm(c, v, tube, 1000).ok());
}

TEST(BpmPeriodic, RandomCyclesSatisfyAllProperties) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const int l = 2 + trial % 2;
    std::vector<EuclideanIsometry> isos;
    std::vector<BoundedRegion> tube;
    for (int j = 0; j < 5; ++j) {
      isos.emplace_back(random_orthogonal(rng, l), Vector::NullaryExpr(l, [&] { return coord(rng); }));
      tube.push_back(BoundedRegion::disk(Vector::NullaryExpr(l, [&] { return coord(rng); }), 0.5));
    }
    // Two cycles: 0 -> 2 -> 4 -> 0 and 1 <-> 3.
    const FiniteBaseVortex v(isos, {2, 3, 4, 1, 0});
    const BpmCertificate c = bpm_periodic(v, tube);
    const BpmReport r = check_bpm(c, v, tube, 300, trial);
    EXPECT_TRUE(r.ok()) << "trial " << trial << ": " << r.first_failure();
  }
}

TEST(BpmPeriodic, CycleReturnMapsFirstSetOntoItself) {
  const FiniteBaseVortex v = translate_then_flip();
  const BpmCertificate c = bpm_periodic(v, std::vector<BoundedRegion>(2, kUnitDisk));
  const EuclideanIsometry full = v.isometry(1) * v.isometry(0);
  EXPECT_TRUE(equivalent(image(full, c.regions[0]), c.regions[0]));
}

TEST(BpmPeriodic, SingleFiberMatchesPlanar) {
  const auto iso = EuclideanIsometry::rotation_about(vec({1, 1}), 0.2);
  const auto u = BoundedRegion::disk(vec({2, 0}), 1);
  const BpmCertificate a = bpm_periodic(FiniteBaseVortex({iso}), {u});
  const BpmCertificate b = bpm_planar(iso, u);
  EXPECT_TRUE(equivalent(a.regions[0], b.region()));
}

TEST(BpmPeriodic, EmptyFiberIsTubeViolation) {
  EXPECT_THROW(bpm_periodic(translate_then_flip(), {kUnitDisk, BoundedRegion(2)}), TubeViolation);
  EXPECT_THROW(bpm_periodic(translate_then_flip(), {kUnitDisk}), InputError);
}

TEST(Sabotage, ShrunkenBallFailsAvoidance) {
  const auto iso = EuclideanIsometry::rotation_about(vec({0, 0}), 1.0 / 6);
  const auto u = BoundedRegion::disk(vec({3, 0}), 2);
  BpmCertificate c = bpm_planar(iso, u);
  c.regions[0] = BallComplement{vec({0, 0}), 4};
  const BpmReport r = check_bpm(c, iso, u, 2000);
  EXPECT_FALSE(r.avoidance);
  EXPECT_EQ(r.first_failure(), "avoidance");
  try {
    verify_bpm(c, iso, u, 2000);
    FAIL() << "expected a property violation";
  } catch (const PropertyViolation& e) {
    EXPECT_EQ(e.property(), "avoidance");
    EXPECT_EQ(e.exit_code(), 2);
  }
}

TEST(Sabotage, DisplacedWitnessFails) {
  const auto iso = EuclideanIsometry::rotation_about(vec({0, 0}), 1.0 / 6);
  const auto u = BoundedRegion::disk(vec({3, 0}), 2);
  BpmCertificate c = bpm_planar(iso, u);
  c.witness[0] += 1e-3;
  try {
    verify_bpm(c, iso, u, 500);
    FAIL() << "expected a property violation";
  } catch (const PropertyViolation& e) {
    EXPECT_EQ(e.property(), "witness");
  }
}

TEST(Sabotage, OffCenterBallFailsInvariance) {
  const auto iso = EuclideanIsometry::rotation_about(vec({0, 0}), 0.25);
  const auto u = BoundedRegion::disk(vec({0, 0}), 1);
  BpmCertificate c = bpm_planar(iso, u);
  c.regions[0] = BallComplement{vec({0.5, 0}), 2};
  const BpmReport r = check_bpm(c, iso, u, 500);
  EXPECT_FALSE(r.invariant_symbolic);
  EXPECT_EQ(r.first_failure(), "invariance");
}

TEST(Regions, BandContainmentAndNormalization) {
  const SymbolicRegion band = BandComplement{vec({0, 2}), -2, 2};
  EXPECT_TRUE(contains(band, vec({5, 1})));
  EXPECT_TRUE(contains(band, vec({5, -1})));
  EXPECT_FALSE(contains(band, vec({0, 0.5})));
  EXPECT_TRUE(equivalent(band, SymbolicRegion(BandComplement{vec({0, -1}), -1, 1})));
  EXPECT_THROW(SymbolicRegion(BandComplement{vec({0, 0}), 0, 1}), InputError);
  EXPECT_THROW(SymbolicRegion(BandComplement{vec({0, 1}), 1, 0}), InputError);
}

TEST(Regions, ImageMatchesPointwise) {
  std::mt19937_64 rng(3);
  const SymbolicRegion ball = BallComplement{vec({1, 2}), 1.5};
  const auto iso = EuclideanIsometry(rotation2(0.3), vec({-1, 4}));
  const SymbolicRegion moved = image(iso, ball);
  std::uniform_real_distribution<double> coord(-6, 6);
  for (int i = 0; i < 500; ++i) {
    const Vector v = vec({coord(rng), coord(rng)});
    EXPECT_EQ(contains(ball, v), contains(moved, iso(v)));
  }
}

TEST(Regions, ConnectedWithInfinity) {
  EXPECT_TRUE(connected_with_infinity(BallComplement{vec({0, 0}), 1}));
  EXPECT_TRUE(connected_with_infinity(BandComplement{vec({1, 0}), -1, 1}));
}

TEST(Regions, SamplesLieInRegion) {
  std::mt19937_64 rng(9);
  const SymbolicRegion ball = BallComplement{vec({0, 0, 0}), 2};
  const SymbolicRegion prod = ProductWithFullFactor{std::make_shared<const SymbolicRegion>(BallComplement{vec({1, 1}), 1}),
                                                    mat({{1, 0}, {0, 0}, {0, 1}})};
  for (const auto* k : {&ball, &prod}) {
    for (const Vector& v : sample(*k, 200, rng, 3)) EXPECT_TRUE(contains(*k, v, 1e-9));
  }
}

TEST(Regions, BoundedRegionSupportAndFarthest) {
  BoundedRegion u = BoundedRegion::disk(vec({0, 0}), 1);
  u.add_box(vec({2, -1}), vec({3, 1}));
  EXPECT_NEAR(u.support(vec({1, 0})).value, 3, 1e-12);
  EXPECT_NEAR(u.support(vec({-1, 0})).value, 1, 1e-12);
  EXPECT_NEAR(u.farthest(vec({0, 0})).value, std::sqrt(10.0), 1e-12);
  EXPECT_TRUE(u.on_boundary(vec({3, 0}), 1e-12));
  EXPECT_FALSE(u.on_boundary(vec({2.5, 0}), 1e-12));
  EXPECT_THROW(BoundedRegion::disk(vec({0, 0}), 0), InputError);
}

TEST(PeriodicApprox, EmptyAngleListGivesEmptyTable) {
  const VortexSpec v = RotationVortex{Angle::exact(1, 5), Angle::exact(1, 4), TrigPolynomial::constant(1.0)};
  const PeriodicApproxTable t = periodic_approx_experiment(v, {}, kUnitDisk);
  EXPECT_TRUE(t.rows.empty());
  EXPECT_TRUE(t.hausdorff.empty());
}

TEST(PeriodicApprox, ConstantCocycleGivesIdenticalSets) {
  // rho and beta do not depend on x, so every period sees the same rotation,
  // and U is centered at its fixed point.
  const VortexSpec v = RotationVortex{Angle::exact(1, 5), Angle::exact(1, 10), TrigPolynomial::constant(1.0)};
  const Complex c = 1.0 / (1.0 - unit(0.1));
  const auto u = BoundedRegion::disk(vec({c.real(), c.imag()}), 1);
  const std::vector<Rational> angles{Rational(1, 4), Rational(1, 5), Rational(3, 7)};
  const PeriodicApproxTable t = periodic_approx_experiment(v, angles, u);
  ASSERT_EQ(t.rows.size(), 3u);
  for (const auto& row : t.rows) {
    ASSERT_TRUE(row.region) << row.error;
    EXPECT_TRUE(equivalent(*row.region, *t.rows[0].region));
  }
  for (const auto& row : t.hausdorff)
    for (double d : row) EXPECT_EQ(d, 0.0);
}

TEST(PeriodicApprox, SampleFollowsOrbit) {
  const VortexSpec v = RotationVortex{Angle::exact(1, 5), Angle::exact(0, 1), TrigPolynomial::monomial(1)};
  const FiniteBaseVortex f = periodic_sample(v, Rational(2, 5));
  ASSERT_EQ(f.size(), 5u);
  for (std::size_t j = 0; j < 5; ++j) {
    const double x = 2.0 * static_cast<double>(j) / 5;
    EXPECT_NEAR(f.isometry(j).translation()[0], std::cos(kTwoPi * x), 1e-12);
    EXPECT_NEAR(f.isometry(j).translation()[1], std::sin(kTwoPi * x), 1e-12);
  }
}

}  // namespace
}  // namespace vortexlab
