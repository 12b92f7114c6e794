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
#include <sstream>

#include "test_util.hpp"
#include "vortexlab/io.hpp"

namespace vortexlab {
namespace {

using testing::mat;
using testing::random_orthogonal;
using testing::random_trig;
using testing::vec;

TEST(Io, MalformedJsonReportsLineAndColumn) {
  const std::string text = "{\n  \"a\": 1,\n  \"b\": {\"num\": 1 \"den\": 2}\n}\n";
  try {
    parse_json(text, "x.json");
    FAIL() << "expected an input error";
  } catch (const InputError& e) {
    EXPECT_EQ(std::string(e.what()), "x.json: malformed JSON at line 3, column 22");
  }
}

TEST(Io, MalformedSampleFile) {
  const std::string path = std::string(VORTEXLAB_SAMPLES_DIR) + "/malformed.json";
  try {
    load_json(path);
    FAIL() << "expected an input error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3, column 25"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load_json("/nonexistent/vortexlab.json"), InputError);
}

TEST(Io, AngleForms) {
  EXPECT_EQ(angle_from_json(Json::parse(R"({"num": 5, "den": 4})"), "a"), Angle::exact(1, 4));
  EXPECT_EQ(angle_from_json(Json::parse(R"({"num": "-1", "den": "3"})"), "a"), Angle::exact(2, 3));
  const Angle d = angle_from_json(Json("0.125"), "a");
  EXPECT_EQ(d.value(), Rational(1, 8));
  EXPECT_FALSE(d.is_exact());
  EXPECT_TRUE(angle_from_json(Json(2), "a").is_exact());
  EXPECT_THROW(angle_from_json(Json::parse(R"({"num": 1, "den": 0})"), "a"), InputError);
  EXPECT_THROW(angle_from_json(Json(true), "a"), InputError);
  const Json out = to_json(Angle::exact(3, 7));
  EXPECT_EQ(out["num"], "3");
  EXPECT_EQ(out["den"], "7");
  EXPECT_EQ(out["exact"], true);
}

TEST(Io, RotationVortexRoundTrip) {
  std::mt19937_64 rng(4);
  const VortexSpec v = RotationVortex{Angle::exact(2, 9), Angle::from_decimal("0.3"), random_trig(rng, 3)};
  const VortexSpec back = vortex_from_json(Json::parse(to_json(v).dump()));
  const auto& a = std::get<RotationVortex>(v);
  const auto& b = std::get<RotationVortex>(back);
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.beta, b.beta);
  for (double x : {0.0, 0.3, 0.7}) EXPECT_EQ(a.rho(x), b.rho(x));
}

TEST(Io, MatrixVortexRoundTrip) {
  std::mt19937_64 rng(8);
  MatrixVortex v{Angle::exact(1, 3), random_orthogonal(rng, 3), {random_trig(rng, 1), random_trig(rng, 2), random_trig(rng, 0)}};
  const VortexSpec back = vortex_from_json(Json::parse(to_json(VortexSpec(v)).dump()));
  const auto& b = std::get<MatrixVortex>(back);
  EXPECT_EQ(b.psi, v.psi);
  EXPECT_EQ(b.fiber_dim(), 3);
}

TEST(Io, VortexValidation) {
  EXPECT_THROW(vortex_from_json(Json::parse(R"({"alpha": 0.1, "beta": 0.2, "rho": [], "fiber_dim": 3})")), InputError);
  EXPECT_THROW(vortex_from_json(Json::parse(R"({"alpha": 0.1, "beta": 0.2,
      "rho": [{"n": 1, "re": 1, "im": 0}, {"n": 1, "re": 2, "im": 0}]})")), InputError);
  EXPECT_THROW(vortex_from_json(Json::parse(R"({"beta": 0.2, "rho": []})")), InputError);
  EXPECT_THROW(vortex_from_json(Json::parse(R"({"alpha": 0.1, "psi": [[1, 0], [0, 1]], "rho": [[]], "fiber_dim": 2})")),
               InputError);
}

TEST(Io, OrthogonalityIsStrictAtTheTolerance) {
  Matrix m = mat({{1, 0}, {0, 1}});
  EXPECT_NO_THROW(require_orthogonal(m, "m"));
  m(0, 0) = 1 + 1e-13;
  EXPECT_NO_THROW(require_orthogonal(m, "m"));
  m(0, 0) = 1 + 1e-11;
  EXPECT_THROW(require_orthogonal(m, "m"), InputError);
  EXPECT_THROW(require_orthogonal(mat({{2, 0}, {0, 0.5}}), "m"), InputError);
}

TEST(Io, FiniteVortexRoundTrip) {
  const FiniteBaseVortex v({EuclideanIsometry::translation(vec({1, 0})), EuclideanIsometry::rotation_about(vec({0, 1}), 0.25),
                            EuclideanIsometry(mat({{1, 0}, {0, -1}}), vec({0, 0}))},
                           {2, 0, 1});
  const FiniteBaseVortex back = finite_vortex_from_json(Json::parse(to_json(v).dump()));
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_TRUE(back.isometry(j).approx_equal(v.isometry(j), 0)) << j;
    EXPECT_EQ(back.next(j), v.next(j));
  }
  EXPECT_THROW(finite_vortex_from_json(Json::parse(R"({"isometries": []})")), InputError);
}

TEST(Io, BoundedRegionRoundTrip) {
  BoundedRegion u = BoundedRegion::disk(vec({1, 2}), 0.5);
  u.add_box(vec({0, 0}), vec({1, 3}));
  const BoundedRegion back = region_from_json(Json::parse(to_json(u).dump()), "u");
  for (const Vector& p : {vec({1, 2.4}), vec({0.5, 2.9}), vec({1.6, 2}), vec({-0.1, 0})}) {
    EXPECT_EQ(back.depth(p) >= 0, u.depth(p) >= 0);
  }
  EXPECT_THROW(region_from_json(Json::parse(R"({"disks": [], "boxes": []})"), "u"), TubeViolation);
}

TEST(Io, SymbolicRegionRoundTrip) {
  const SymbolicRegion ball = BallComplement{vec({1, 0}), 2};
  const SymbolicRegion band = BandComplement{vec({0, 1}), -1, 1};
  const SymbolicRegion tree = RegionUnion{{image(EuclideanIsometry::rotation_about(vec({0, 0}), 0.2), ball), band}};
  const SymbolicRegion prod = ProductWithFullFactor{std::make_shared<const SymbolicRegion>(ball), mat({{1, 0}, {0, 1}, {0, 0}})};
  for (const auto* k : {&ball, &band, &tree, &prod}) {
    const SymbolicRegion back = symbolic_from_json(Json::parse(to_json(*k).dump()));
    EXPECT_EQ(back.kind(), k->kind());
    EXPECT_TRUE(equivalent(back, *k)) << k->kind();
  }
  EXPECT_THROW(symbolic_from_json(Json::parse(R"({"type": "torus"})")), InputError);
}

TEST(Io, VectorsHaveNoNegativeZero) {
  EXPECT_EQ(to_json(vec({-0.0, 1.5})).dump(), "[0.0,1.5]");
}

TEST(Io, OrbitCsv) {
  const RotationVortex v{Angle::exact(1, 4), Angle::exact(1, 2), TrigPolynomial::constant(1.0)};
  const std::string csv = orbit_csv(v, State<RotationVortex>{Angle{}, 0.0}, 4);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,x,z_re,z_im");
  const double want[4][3] = {{0, 0, 0}, {0.25, 1, 0}, {0.5, 0, 0}, {0.75, 1, 0}};
  for (int n = 0; n < 4; ++n) {
    ASSERT_TRUE(std::getline(in, line));
    double row[4];
    char comma;
    std::istringstream fields(line);
    fields >> row[0] >> comma >> row[1] >> comma >> row[2] >> comma >> row[3];
    EXPECT_EQ(row[0], n);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(row[i + 1], want[n][i], 1e-15) << line;
  }
  EXPECT_FALSE(std::getline(in, line));
}

TEST(Io, FormatDoubleRoundTrips) {
  for (double x : {0.1, 1.0 / 3, 6.02214076e23, -2.5e-300}) EXPECT_EQ(std::stod(format_double(x)), x);
}

}  // namespace
}  // namespace vortexlab
