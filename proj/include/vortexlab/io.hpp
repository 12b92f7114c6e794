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

// JSON and CSV encodings of the laboratory types.

#pragma once

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vortexlab/anosov_katok.hpp"
#include "vortexlab/bpm.hpp"
#include "vortexlab/frequency_set.hpp"
#include "vortexlab/reducibility.hpp"
#include "vortexlab/vortex.hpp"

namespace vortexlab {

using Json = nlohmann::ordered_json;

/// %.17g, enough to round trip a double.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

inline double number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw InputError(where + ": non-finite number");
  return x;
}

inline long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<long>();
}

inline Integer big_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const bool ok = !s.empty() && s.find_first_not_of("+-0123456789") == std::string::npos &&
                    s.find_first_of("0123456789") != std::string::npos;
    if (ok) {
      try {
        return Integer(s);
      } catch (const std::exception&) {
      }
    }
  }
  throw InputError(where + ": expected an integer or an integer string");
}

inline std::string to_string(const Integer& i) { return i.str(); }

}  // namespace detail

/// Parses JSON text, reporting syntax errors with line and column.
inline Json parse_json(const std::string& text, const std::string& source = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = detail::line_column(text, e.byte);
    throw InputError(source + ": malformed JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(col));
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json load_json(const std::string& path) { return parse_json(read_file(path), path); }

// ---- scalars, vectors, matrices -------------------------------------------

inline Json rational_json(const Rational& r) {
  return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

/// Exact angles as {num, den}; decimals keep their exact literal value but
/// carry "exact": false.
inline Json to_json(const Angle& a) {
  Json j = rational_json(a.value());
  j["exact"] = a.is_exact();
  j["value"] = a.to_double();
  return j;
}

inline Angle angle_from_json(const Json& j, const std::string& where) {
  if (j.is_object()) {
    const Integer num = detail::big_integer(detail::field(j, "num", where), where + ".num");
    const Integer den = detail::big_integer(detail::field(j, "den", where), where + ".den");
    if (den == 0) throw InputError(where + ": zero denominator");
    return Angle::exact(Rational(num, den));
  }
  if (j.is_string()) return Angle::from_decimal(j.get<std::string>());
  if (j.is_number_integer()) return Angle::exact(Rational(j.get<long long>()));
  if (j.is_number()) return Angle::from_double(detail::number(j, where));
  throw InputError(where + ": an angle is {\"num\", \"den\"} or a decimal string");
}

inline Json to_json(const Vector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v[i] + 0.0);  // no -0
  return j;
}

inline Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) j.push_back(to_json(Vector(m.row(i).transpose())));
  return j;
}

inline Vector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a nonempty array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = detail::number(j[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

inline Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector row = vector_from_json(j[static_cast<std::size_t>(i)], where + "[" + std::to_string(i) + "]");
    if (row.size() != n) throw InputError(where + ": matrix must be square");
    m.row(i) = row.transpose();
  }
  return m;
}

/// Input matrices must be orthogonal to 1e-12, entrywise.
inline void require_orthogonal(const Matrix& m, const std::string& where) {
  const double err = (m.transpose() * m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
  if (err > kOrthogonalityTolerance) {
    throw InputError(where + ": matrix is not orthogonal to 1e-12 (error " + format_double(err) + ")");
  }
  if (std::abs(std::abs(m.determinant()) - 1.0) > kOrthogonalityTolerance) {
    throw InputError(where + ": determinant is not +-1 to 1e-12");
  }
}

// ---- trigonometric polynomials and vortices -------------------------------

inline Json to_json(const TrigPolynomial& f) {
  Json j = Json::array();
  for (const auto& [n, c] : f.terms()) j.push_back({{"n", n}, {"re", c.real()}, {"im", c.imag()}});
  return j;
}

inline TrigPolynomial trig_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of {n, re, im}");
  TrigPolynomial::Terms terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const long n = detail::integer(detail::field(j[i], "n", at), at + ".n");
    if (terms.count(n)) throw InputError(at + ": repeated frequency " + std::to_string(n));
    const double re = j[i].contains("re") ? detail::number(j[i]["re"], at + ".re") : 0.0;
    const double im = j[i].contains("im") ? detail::number(j[i]["im"], at + ".im") : 0.0;
    terms[n] = {re, im};
  }
  return TrigPolynomial(std::move(terms));
}

inline Json to_json(const RotationVortex& v) {
  return {{"alpha", to_json(v.alpha)}, {"beta", to_json(v.beta)}, {"rho", to_json(v.rho)}, {"fiber_dim", 2}};
}

inline Json to_json(const MatrixVortex& v) {
  Json rho = Json::array();
  for (const auto& f : v.rho) rho.push_back(to_json(f));
  return {{"alpha", to_json(v.alpha)}, {"psi", to_json(v.psi)}, {"rho", rho}, {"fiber_dim", v.fiber_dim()}};
}

inline Json to_json(const VortexSpec& v) {
  return std::visit([](const auto& w) { return to_json(w); }, v);
}

/// {"alpha", "beta", "rho": [{n, re, im}], "fiber_dim": 2} for a rotation
/// of C, or {"alpha", "psi": [[...]], "rho": [[{n, re, im}], ...]} for R^l.
inline VortexSpec vortex_from_json(const Json& j) {
  const std::string where = "vortex";
  if (!j.is_object()) throw InputError("vortex: expected an object");
  const Angle alpha = angle_from_json(detail::field(j, "alpha", where), "vortex.alpha");
  if (j.contains("psi")) {
    MatrixVortex v{alpha, matrix_from_json(j["psi"], "vortex.psi"), {}};
    require_orthogonal(v.psi, "vortex.psi");
    const Json& rho = detail::field(j, "rho", where);
    if (!rho.is_array()) throw InputError("vortex.rho: expected one component per fiber dimension");
    for (std::size_t i = 0; i < rho.size(); ++i) {
      v.rho.push_back(trig_from_json(rho[i], "vortex.rho[" + std::to_string(i) + "]"));
    }
    if (j.contains("fiber_dim") && detail::integer(j["fiber_dim"], "vortex.fiber_dim") != v.fiber_dim()) {
      throw InputError("vortex.fiber_dim does not match psi");
    }
    v.validate();
    return v;
  }
  if (j.contains("fiber_dim") && detail::integer(j["fiber_dim"], "vortex.fiber_dim") != 2) {
    throw InputError("vortex: a rotation vortex has fiber_dim 2; give psi for other dimensions");
  }
  return RotationVortex{alpha, angle_from_json(detail::field(j, "beta", where), "vortex.beta"),
                        trig_from_json(detail::field(j, "rho", where), "vortex.rho")};
}

inline const RotationVortex& require_rotation(const VortexSpec& v, const std::string& what) {
  if (const auto* r = std::get_if<RotationVortex>(&v)) return *r;
  throw UnsupportedError(what + " needs a vortex with fiber C and a constant rotation");
}

// ---- isometries and finite-base vortices ----------------------------------

inline Json to_json(const EuclideanIsometry& iso) {
  return {{"linear", to_json(iso.linear())}, {"translation", to_json(iso.translation())}};
}

inline EuclideanIsometry isometry_from_json(const Json& j, const std::string& where) {
  const Matrix linear = matrix_from_json(detail::field(j, "linear", where), where + ".linear");
  require_orthogonal(linear, where + ".linear");
  const Vector t = vector_from_json(detail::field(j, "translation", where), where + ".translation");
  if (t.size() != linear.rows()) throw InputError(where + ": translation dimension does not match linear");
  return {linear, t};
}

inline Json to_json(const FiniteBaseVortex& v) {
  Json isos = Json::array(), next = Json::array();
  for (std::size_t j = 0; j < v.size(); ++j) {
    isos.push_back(to_json(v.isometry(j)));
    next.push_back(v.next(j));
  }
  return {{"isometries", isos}, {"next", next}, {"labels", v.labels()}};
}

/// {"isometries": [...], "next": [...] (optional, default j -> j + 1)}.
inline FiniteBaseVortex finite_vortex_from_json(const Json& j) {
  const Json& list = detail::field(j, "isometries", "vortex");
  if (!list.is_array() || list.empty()) throw InputError("vortex.isometries: expected a nonempty array");
  std::vector<EuclideanIsometry> isos;
  for (std::size_t i = 0; i < list.size(); ++i) {
    isos.push_back(isometry_from_json(list[i], "vortex.isometries[" + std::to_string(i) + "]"));
  }
  if (!j.contains("next")) return FiniteBaseVortex(std::move(isos));
  std::vector<std::size_t> next;
  for (std::size_t i = 0; i < j["next"].size(); ++i) {
    const long n = detail::integer(j["next"][i], "vortex.next");
    if (n < 0) throw InputError("vortex.next: negative index");
    next.push_back(static_cast<std::size_t>(n));
  }
  return FiniteBaseVortex(std::move(isos), std::move(next));
}

// ---- regions and certificates ---------------------------------------------

inline Json to_json(const BoundedRegion& u) {
  Json disks = Json::array(), boxes = Json::array();
  for (const auto& d : u.disks()) disks.push_back({{"c", to_json(d.center)}, {"r", d.radius}});
  for (const auto& b : u.boxes()) {
    Json box{{"lo", to_json(b.lo)}, {"hi", to_json(b.hi)}};
    if (!b.frame.approx_equal(EuclideanIsometry::identity(b.frame.dim()), 0)) box["frame"] = to_json(b.frame);
    boxes.push_back(box);
  }
  return {{"disks", disks}, {"boxes", boxes}};
}

inline BoundedRegion region_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected {\"disks\", \"boxes\"}");
  BoundedRegion u;
  if (j.contains("disks")) {
    for (std::size_t i = 0; i < j["disks"].size(); ++i) {
      const std::string at = where + ".disks[" + std::to_string(i) + "]";
      const Json& d = j["disks"][i];
      const Vector c = vector_from_json(detail::field(d, "c", at), at + ".c");
      const double r = detail::number(detail::field(d, "r", at), at + ".r");
      if (u.empty()) u = BoundedRegion(static_cast<int>(c.size()));
      u.add_disk(c, r);
    }
  }
  if (j.contains("boxes")) {
    for (std::size_t i = 0; i < j["boxes"].size(); ++i) {
      const std::string at = where + ".boxes[" + std::to_string(i) + "]";
      const Json& b = j["boxes"][i];
      Vector lo = vector_from_json(detail::field(b, "lo", at), at + ".lo");
      Vector hi = vector_from_json(detail::field(b, "hi", at), at + ".hi");
      if (u.empty()) u = BoundedRegion(static_cast<int>(lo.size()));
      if (b.contains("frame")) {
        u.add_box(isometry_from_json(b["frame"], at + ".frame"), std::move(lo), std::move(hi));
      } else {
        u.add_box(std::move(lo), std::move(hi));
      }
    }
  }
  if (u.empty()) throw TubeViolation(where + ": region has no disks or boxes");
  return u;
}

inline Json to_json(const SymbolicRegion& k) {
  return std::visit(
      [&k](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        Json j{{"type", k.kind()}};
        if constexpr (std::is_same_v<T, BandComplement>) {
          j["normal"] = to_json(n.normal);
          j["low"] = n.low;
          j["high"] = n.high;
        } else if constexpr (std::is_same_v<T, BallComplement>) {
          j["center"] = to_json(n.center);
          j["radius"] = n.radius;
        } else if constexpr (std::is_same_v<T, ProductWithFullFactor>) {
          j["basis"] = to_json(n.basis);
          j["base"] = to_json(*n.base);
        } else if constexpr (std::is_same_v<T, RegionImage>) {
          j["isometry"] = to_json(n.isometry);
          j["inner"] = to_json(*n.inner);
        } else {
          j["members"] = Json::array();
          for (const auto& m : n.members) j["members"].push_back(to_json(m));
        }
        return j;
      },
      k.node());
}

inline SymbolicRegion symbolic_from_json(const Json& j, const std::string& where = "region") {
  const std::string type = detail::field(j, "type", where).get<std::string>();
  auto sub = [&](const char* key) {
    return std::make_shared<const SymbolicRegion>(symbolic_from_json(detail::field(j, key, where), where + "." + key));
  };
  if (type == "band-complement") {
    return BandComplement{vector_from_json(detail::field(j, "normal", where), where + ".normal"),
                          detail::number(detail::field(j, "low", where), where + ".low"),
                          detail::number(detail::field(j, "high", where), where + ".high")};
  }
  if (type == "ball-complement") {
    return BallComplement{vector_from_json(detail::field(j, "center", where), where + ".center"),
                          detail::number(detail::field(j, "radius", where), where + ".radius")};
  }
  if (type == "product") {
    const Json& rows = detail::field(j, "basis", where);
    if (!rows.is_array() || rows.empty()) throw InputError(where + ".basis: expected rows");
    Matrix basis(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Vector row = vector_from_json(rows[i], where + ".basis");
      if (row.size() != basis.cols()) throw InputError(where + ".basis: ragged rows");
      basis.row(static_cast<Eigen::Index>(i)) = row.transpose();
    }
    return ProductWithFullFactor{sub("base"), basis};
  }
  if (type == "image") return RegionImage{isometry_from_json(detail::field(j, "isometry", where), where), sub("inner")};
  if (type == "union") {
    RegionUnion u;
    const Json& members = detail::field(j, "members", where);
    for (std::size_t i = 0; i < members.size(); ++i) {
      u.members.push_back(symbolic_from_json(members[i], where + ".members[" + std::to_string(i) + "]"));
    }
    return u;
  }
  throw InputError(where + ": unknown region type \"" + type + "\"");
}

inline Json to_json(const BpmReport& r) {
  return {{"avoidance", r.avoidance},
          {"avoidance_samples", r.avoidance_samples},
          {"connected", r.connected},
          {"invariant_symbolic", r.invariant_symbolic},
          {"invariant_sampled", r.invariant_sampled},
          {"invariance_samples", r.invariance_samples},
          {"witness", r.witness},
          {"witness_boundary_distance", r.witness_boundary_distance},
          {"ok", r.ok()}};
}

inline Json to_json(const BpmCertificate& c) {
  Json regions = Json::array();
  for (const auto& k : c.regions) regions.push_back(to_json(k));
  Json j{{"construction", c.construction},
         {"regions", regions},
         {"witness_fiber", c.witness_fiber},
         {"witness", to_json(c.witness)}};
  if (c.checks) j["checks"] = to_json(*c.checks);
  return j;
}

inline Json to_json(const NormalForm& f) {
  Json j{{"kind", to_string(f.kind)}};
  switch (f.kind) {
    case NormalForm::Kind::Translation: j["translation"] = to_json(f.translation); break;
    case NormalForm::Kind::RotationAboutPoint:
      j["center"] = to_json(f.center);
      j["angle"] = f.angle;
      break;
    case NormalForm::Kind::GlideOrReversing: j["square"] = to_json(*f.square); break;
    case NormalForm::Kind::BlockDecomposition: {
      j["basis"] = to_json(f.basis);
      Json blocks = Json::array();
      for (const auto& b : f.blocks) blocks.push_back({{"first", b.first}, {"size", b.size}, {"angle", b.angle}});
      j["blocks"] = blocks;
      j["translation_in_basis"] = to_json(f.translation_in_basis);
      break;
    }
  }
  return j;
}

// ---- reducibility reports --------------------------------------------------

inline Json to_json(const DriftReport& r) {
  return {{"n_values", r.n_values}, {"sup_ratios", r.sup_ratios}, {"extrapolated_drift", r.extrapolated_drift}};
}

inline Json to_json(const DefectReport& r) {
  return {{"k", r.k}, {"sup_defect", r.sup_defect}, {"section", to_json(r.section)}};
}

inline Json to_json(const DiophantineReport& r) {
  Json mins = Json::array();
  for (const auto& [n, d] : r.min_values) mins.push_back({{"n", n}, {"value", d}});
  Json j{{"tau", r.tau}, {"N", r.N}, {"best_C", r.best_C}, {"worst_n", r.worst_n}, {"min_values", mins}};
  j["resonance"] = r.resonance ? Json(*r.resonance) : Json(nullptr);
  return j;
}

inline Json to_json(const EscapeReport& r) {
  return {{"horizon", r.horizon},
          {"radius", r.radius},
          {"forward_exit", r.forward_exit ? Json(*r.forward_exit) : Json(nullptr)},
          {"backward_exit", r.backward_exit ? Json(*r.backward_exit) : Json(nullptr)},
          {"recurrent_within_horizon", r.recurrent_within_horizon}};
}

// ---- frequency set and staged construction --------------------------------

inline Json to_json(const FsEntry& e) {
  return {{"q", e.q.str()}, {"t", e.t.str()}, {"r", e.r.str()}, {"p", e.p.str()}};
}

inline Json to_json(const FsCoverage& c) {
  Json qs = Json::array(), uncovered = Json::array();
  for (const auto& q : c.qs) qs.push_back(q.str());
  for (const auto& [i, j] : c.uncovered) uncovered.push_back({i, j});
  return {{"grid", c.grid},
          {"qs", qs},
          {"pairs", c.pairs},
          {"complete", c.complete()},
          {"complete_at", c.complete_at ? Json(*c.complete_at) : Json(nullptr)},
          {"uncovered", uncovered}};
}

inline Json to_json(const StageConditions& c) {
  return {{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"c4", c.c4}, {"c5'", c.c5p}};
}

/// ell, C and D are irrational; the log gives the rounded-up bound.
inline Json to_json(const AkStage& st) {
  return {{"k", st.k},
          {"m", st.m},
          {"q", st.q.str()},
          {"s", st.s.str()},
          {"p", st.p.str()},
          {"t", st.t.str()},
          {"r", st.r.str()},
          {"alpha", rational_json(st.alpha)},
          {"beta", rational_json(st.beta)},
          {"ell", to_double(st.ell.hi)},
          {"C", to_double(st.C.hi)},
          {"D", to_double(st.D.hi)},
          {"conditions", to_json(st.conditions)}};
}

inline Json to_json(const StageEstimate& e) {
  return {{"k", e.k},
          {"term_ell", to_double(e.term_ell)},
          {"term_c", to_double(e.term_c)},
          {"term_d", to_double(e.term_d)},
          {"rhs", to_double(e.rhs)},
          {"rhs_corrected", to_double(e.rhs_corrected)},
          {"chain",
           {{"s_bound", e.s_bound},
            {"ell_term", e.ell_term},
            {"c_term", e.c_term},
            {"d_term", e.d_term},
            {"growth_term", e.growth_term},
            {"rhs_bound", e.rhs_bound},
            {"corrected_bound", e.corrected_bound}}},
          {"sampled_sup", e.sampled_sup},
          {"n_checked", e.n_checked},
          {"grid", e.grid},
          {"within_stated", e.within_stated},
          {"within_corrected", e.within_corrected}};
}

inline Json to_json(const DensityCertificate& c) {
  return {{"k", c.k},
          {"kind", c.kind},
          {"epsilon", c.epsilon},
          {"delta", c.delta},
          {"delta_corrected", c.delta_corrected},
          {"radius", c.radius},
          {"analytic_only", c.analytic_only},
          {"empirical",
           {{"status", c.empirical.status},
            {"status_corrected", c.empirical.status_corrected},
            {"note", c.empirical.note},
            {"points", c.empirical.points},
            {"queries", c.empirical.queries},
            {"misses", c.empirical.misses},
            {"worst_fiber", c.empirical.worst_fiber}}}};
}

inline Json to_json(const IndependenceReport& r) {
  Json zeros = Json::array();
  for (std::size_t i = 0; i < r.zero_triples.size(); ++i) {
    zeros.push_back({{"triple", r.zero_triples[i]}, {"divisible", static_cast<bool>(r.zero_divisible[i])}});
  }
  return {{"k", r.k},
          {"bound", r.bound},
          {"triples", r.triples},
          {"zero_triples", zeros},
          {"smallest_nonzero", rational_json(r.smallest_nonzero)},
          {"dichotomy", r.dichotomy},
          {"tail", rational_json(r.tail)},
          {"tail_bound", r.tail_bound},
          {"history_ok", r.history_ok}};
}

// ---- CSV ---------------------------------------------------------------------

/// n,x,z_re,z_im (fiber C) or n,x,v_1..v_l, one row per iterate from n = 0.
template <class V>
std::string orbit_csv(const V& v, State<V> s, long rows) {
  if (rows < 1) throw InputError("orbit needs at least one row");
  std::string out;
  auto row = [&out](long n, const Angle& x, const auto& z) {
    out += std::to_string(n) + "," + format_double(x.to_double());
    if constexpr (std::is_same_v<std::decay_t<decltype(z)>, Complex>) {
      out += "," + format_double(z.real()) + "," + format_double(z.imag());
    } else {
      for (Eigen::Index i = 0; i < z.size(); ++i) out += "," + format_double(z[i]);
    }
    out += "\n";
  };
  if constexpr (std::is_same_v<V, RotationVortex>) {
    out = "n,x,z_re,z_im\n";
  } else {
    out = "n,x";
    for (int i = 1; i <= v.fiber_dim(); ++i) out += ",v_" + std::to_string(i);
    out += "\n";
  }
  for (long n = 0; n < rows; ++n) {
    row(n, s.x, s.z);
    if (n + 1 < rows) s = step(v, s);
  }
  return out;
}

/// Pretty JSON with a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace vortexlab
