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


// The staged construction of a transitive rotation vortex.
//
// Stage k carries rationals alpha_k = s_k p_k / q_k, beta_k = r_k alpha_k
// (mod 1) from FS_{q_k}(2, 3) and the section
//   phi_k(x) = sum_{j <= k} ell_j sin(2 pi t_j x) e^{2 pi i r_j x},
// whose graph is invariant under F_k(x, z) = (x + alpha_k, e^{2 pi i beta_k} z + rho_k(x)),
//   (rho_k)_n(x) = phi_k(x + n alpha_k) - e^{2 pi i n beta_k} phi_k(x).
// ell_k = q_k^{1/12} is irrational and is carried as a rational enclosure;
// every inequality is checked with the end of the enclosure that makes it
// harder to satisfy.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vortexlab/angle.hpp"
#include "vortexlab/errors.hpp"
#include "vortexlab/exact.hpp"
#include "vortexlab/frequency_set.hpp"
#include "vortexlab/trig_polynomial.hpp"
#include "vortexlab/vortex.hpp"

namespace vortexlab {

/// ell sin(2 pi t x) e^{2 pi i r x}.
struct PsiTerm {
  Enclosure ell;
  Integer t;
  Integer r;
};

struct StageConditions {
  bool c1 = false;   // 1 <= s <= 2t
  bool c2 = false;   // growth of q
  bool c3 = false;   // |d alpha| against C
  bool c4 = false;   // |d beta| against D
  bool c5p = false;  // |d alpha| + |d beta| <= 2^{-(k+1)} / (k q_k)

  bool all() const { return c1 && c2 && c3 && c4 && c5p; }
};

struct AkStage {
  int k = 1;
  long m = 0;
  Integer q, s, p, t, r;
  Rational alpha, beta;
  Enclosure ell;
  Enclosure C;  // 2 pi sum ell_j (t_j + r_j), a bound for |phi_k'|
  Enclosure D;  // sum ell_j, a bound for |phi_k|
  std::vector<PsiTerm> phi;
  /// Conditions against the previous stage; stage 1 has none and records
  /// them as vacuously true.
  StageConditions conditions;
};

namespace detail {

inline AkStage make_stage(int k, long m, const FsEntry& e, const Integer& s, Enclosure ell, std::vector<PsiTerm> history) {
  AkStage st;
  st.k = k;
  st.m = m;
  st.q = e.q;
  st.s = s;
  st.p = e.p;
  st.t = e.t;
  st.r = e.r;
  st.alpha = frac(Rational(s * e.p, e.q));
  st.beta = frac(st.alpha * e.r);
  st.ell = ell;
  history.push_back({std::move(ell), e.t, e.r});
  st.phi = std::move(history);
  Enclosure sum_ell = Enclosure::exact(0), weighted = Enclosure::exact(0);
  for (const auto& term : st.phi) {
    sum_ell = sum_ell + term.ell;
    weighted = weighted + term.ell.scaled(Rational(term.t + term.r));
  }
  st.D = sum_ell;
  st.C = two_pi().times_nonneg(weighted);
  return st;
}

/// Upper bound for ceil(2 (k+1) sum_{j<=k} ell_j sqrt(q_j))^3.
inline Integer growth_floor(const AkStage& st, const std::vector<Integer>& qs) {
  Rational sum = 0;
  for (std::size_t j = 0; j < st.phi.size(); ++j) sum += st.phi[j].ell.hi * root_enclosure(qs[j], 1, 2).hi;
  return pow(ceil(sum * 2 * (st.k + 1)), 3);
}

}  // namespace detail

/// Stage 1 from the family entry m1, with s_1 = 1.
inline AkStage ak_init(const Rational& ell1, long m1) {
  if (ell1 < 1) throw InputError("ell_1 must be >= 1");
  if (m1 < 1) throw InputError("m_1 must be >= 1");
  const FsEntry e = fs_family(m1);
  if (e.p == 0) throw InputError("m_1 gives an entry without an inverse of t");
  AkStage st = detail::make_stage(1, m1, e, 1, Enclosure::exact(ell1), {});
  st.conditions = {true, true, true, true, true};
  return st;
}

/// The q_j of every stage so far, oldest first. Stages store only their own
/// q; the history is passed alongside when it is needed.
using QHistory = std::vector<Integer>;

/// Condition (2) for a candidate q after stage `st`.
inline bool growth_condition(const AkStage& st, const QHistory& qs, const Integer& q) {
  const Integer& qk = st.q;
  const int k = st.k;
  if (!(q > pow(qk, 3))) return false;
  if (!(pow(q, 5) >= pow(Integer((Integer(1) << (k + 1)) * qk), 12))) return false;
  if (!(q >= pow(Integer(2 * k), 12) * qk)) return false;
  return q >= detail::growth_floor(st, qs);
}

/// Conditions (3), (4) and (5') for the step st -> (alpha, beta).
inline std::array<bool, 3> step_conditions(const AkStage& st, const Rational& alpha, const Rational& beta) {
  const Rational da = abs(alpha - st.alpha), db = abs(beta - st.beta);
  const Rational base = pow2(-(st.k + 2)) / Rational(st.q);
  return {da <= base / st.C.hi, db <= base / st.D.hi,
          da + db <= pow2(-(st.k + 1)) / Rational(st.q * st.k)};
}

/// All conditions for a pair of consecutive stages, recomputed exactly.
inline StageConditions check_conditions(const AkStage& prev, const QHistory& qs, const AkStage& next) {
  StageConditions c;
  c.c1 = next.s >= 1 && next.s <= 2 * next.t;
  c.c2 = growth_condition(prev, qs, next.q);
  const auto step = step_conditions(prev, next.alpha, next.beta);
  c.c3 = step[0];
  c.c4 = step[1];
  c.c5p = step[2];
  return c;
}

struct SearchCounts {
  long candidates_m = 0;
  long c2_failed = 0;     // values of m
  long pairs_tested = 0;  // (m, s) pairs with m passing (2)
  long c3_failed = 0;
  long c4_failed = 0;
  long c5p_failed = 0;
};

/// Next stage: the smallest m in [m_min, m_max], then the smallest s, such
/// that every condition holds. ell_{k+1} = q^{1/12}.
inline AkStage ak_next(const AkStage& st, const QHistory& qs, long m_min, long m_max, SearchCounts* counts = nullptr) {
  if (m_min < 1 || m_max < m_min) throw InputError("stage search needs 1 <= m_min <= m_max");
  if (qs.size() != st.phi.size()) throw InputError("q history does not match the stage");
  SearchCounts c;
  for (long m = m_min; m <= m_max; ++m) {
    ++c.candidates_m;
    const FsEntry e = fs_family(m);
    if (e.p == 0 || !growth_condition(st, qs, e.q)) {
      ++c.c2_failed;
      continue;
    }
    for (Integer s = 1; s <= 2 * e.t; ++s) {
      ++c.pairs_tested;
      const auto [alpha, beta] = fs_pair(e, s);
      const auto ok = step_conditions(st, alpha, beta);
      if (!ok[0]) ++c.c3_failed;
      if (!ok[1]) ++c.c4_failed;
      if (!ok[2]) ++c.c5p_failed;
      if (ok[0] && ok[1] && ok[2]) {
        if (counts) *counts = c;
        AkStage next = detail::make_stage(st.k + 1, m, e, s, root_enclosure(e.q, 1, 12), st.phi);
        next.conditions = check_conditions(st, qs, next);
        if (!next.conditions.all()) throw ConstructionBug("accepted stage fails its own conditions");
        return next;
      }
    }
  }
  if (counts) *counts = c;
  throw SearchExhausted("no (m, s) with m in [" + std::to_string(m_min) + ", " + std::to_string(m_max) +
                        "] meets every condition: m tried " + std::to_string(c.candidates_m) + ", condition 2 failed " +
                        std::to_string(c.c2_failed) + ", pairs tested " + std::to_string(c.pairs_tested) +
                        ", condition 3 failed " + std::to_string(c.c3_failed) + ", condition 4 failed " +
                        std::to_string(c.c4_failed) + ", condition 5' failed " + std::to_string(c.c5p_failed));
}

/// Stages 1..count.
inline std::vector<AkStage> ak_build(const Rational& ell1, long m1, int count, long m_max, long m_min = 1) {
  if (count < 1) throw InputError("ak_build needs at least one stage");
  std::vector<AkStage> stages{ak_init(ell1, m1)};
  QHistory qs{stages.back().q};
  while (static_cast<int>(stages.size()) < count) {
    stages.push_back(ak_next(stages.back(), qs, m_min, m_max));
    qs.push_back(stages.back().q);
  }
  return stages;
}

inline QHistory q_history(const std::vector<AkStage>& stages) {
  QHistory qs;
  for (const auto& s : stages) qs.push_back(s.q);
  return qs;
}

/// phi_k(x).
inline Complex phi_eval(const AkStage& st, double x) {
  Complex sum{};
  for (const auto& term : st.phi) {
    const double tx = wrap01(to_double(term.t) * x), rx = wrap01(to_double(term.r) * x);
    sum += term.ell.approx() * std::sin(kTwoPi * tx) * unit(rx);
  }
  return sum;
}

/// (rho_k)_n(x) = phi_k(x + n alpha_k) - e^{2 pi i n beta_k} phi_k(x).
inline Complex rho_stage_n(const AkStage& st, long n, double x) {
  const double shift = to_double(frac(st.alpha * n));
  const double twist = to_double(frac(st.beta * n));
  return phi_eval(st, wrap01(x + shift)) - unit(twist) * phi_eval(st, x);
}

inline Complex rho_stage(const AkStage& st, double x) { return rho_stage_n(st, 1, x); }

/// phi_k as a trigonometric polynomial:
/// sin(2 pi t x) e^{2 pi i r x} = (e^{2 pi i (r+t) x} - e^{2 pi i (r-t) x}) / (2i).
inline TrigPolynomial phi_series(const AkStage& st) {
  TrigPolynomial::Terms terms;
  const Complex half_over_i(0, -0.5);
  for (const auto& term : st.phi) {
    const long t = term.t.convert_to<long>(), r = term.r.convert_to<long>();
    terms[r + t] += term.ell.approx() * half_over_i;
    terms[r - t] -= term.ell.approx() * half_over_i;
  }
  return TrigPolynomial(std::move(terms));
}

struct AkExport {
  RotationVortex vortex;
  /// Bound for sup |rho - rho_K| over the remaining stages: sum_{j >= K} 2^{-j}.
  Rational tail_bound;
};

/// (alpha_K, beta_K, rho_K) of the last stage with rho_K = coboundary of phi_K.
inline AkExport ak_export(const std::vector<AkStage>& stages) {
  if (stages.empty()) throw InputError("ak_export needs at least one stage");
  const AkStage& st = stages.back();
  const Angle alpha = Angle::exact(st.alpha), beta = Angle::exact(st.beta);
  const Complex lambda = beta.phase();
  const TrigPolynomial phi = phi_series(st);
  TrigPolynomial::Terms rho;
  for (const auto& [n, c] : phi.terms()) rho[n] = c * (alpha.phase(n) - lambda);
  return {{alpha, beta, TrigPolynomial(std::move(rho))}, pow2(1 - st.k)};
}

struct StageEstimate {
  int k = 0;
  // Terms of the stated bound
  //   ell_{k+1} q_k s_{k+1} / q_{k+1} + C_k q_k |d alpha| + D_k q_k |d beta|,
  // rounded up.
  Rational term_ell, term_c, term_d, rhs;
  // The same bound with the factor 2 pi that |sin a - sin b| <= |a - b| and
  // |e^{2 pi i a} - e^{2 pi i b}| <= 2 pi |a - b| put on the first and third
  // terms. This is the bound the differences actually obey.
  Rational rhs_corrected;
  bool s_bound = false;          // s <= 2t, t^3 <= q and q > 64, so s <= 2 q^{1/3} < q^{1/2}
  bool ell_term = false;         // term_ell <= q_k / q_{k+1}^{5/12}
  bool c_term = false;           // term_c <= 2^{-(k+2)}
  bool d_term = false;           // term_d <= 2^{-(k+2)}
  bool growth_term = false;      // q_k / q_{k+1}^{5/12} <= 2^{-(k+1)}
  bool rhs_bound = false;        // rhs <= 2^{-k}
  bool corrected_bound = false;  // rhs_corrected <= 2^{-k}
  double sampled_sup = 0;
  long n_checked = 0;
  int grid = 0;
  bool within_stated = false;     // sampled_sup <= rhs + 1e-9
  bool within_corrected = false;  // sampled_sup <= rhs_corrected + 1e-9

  bool chain_ok() const { return s_bound && ell_term && c_term && d_term && growth_term && rhs_bound; }
};

/// Compares (rho_{k+1})_n with (rho_k)_n on `grid` points and n up to q_k
/// (an evenly spread subsample of `n_cap` values when q_k is larger), and
/// evaluates the bound chain exactly.
inline StageEstimate stage_estimate(const AkStage& prev, const AkStage& next, int grid, long n_cap = 1000) {
  if (grid < 1) throw InputError("stage_estimate needs grid >= 1");
  StageEstimate e;
  e.k = prev.k;
  e.grid = grid;
  const Rational qk(prev.q), q(next.q);
  const Rational da = abs(next.alpha - prev.alpha), db = abs(next.beta - prev.beta);
  e.term_ell = next.ell.hi * qk * Rational(next.s) / q;
  e.term_c = prev.C.hi * qk * da;
  e.term_d = prev.D.hi * qk * db;
  e.rhs = e.term_ell + e.term_c + e.term_d;
  e.rhs_corrected = two_pi().hi * (e.term_ell + e.term_d) + e.term_c;
  e.s_bound = next.s >= 1 && next.s <= 2 * next.t && pow(next.t, 3) <= next.q && next.q > 64;
  // ell s / q <= q^{-5/12}  <=>  (ell s)^12 <= q^7.
  e.ell_term = pow(next.ell.hi * Rational(next.s), 12) <= pow(q, 7);
  e.c_term = e.term_c <= pow2(-(prev.k + 2));
  e.d_term = e.term_d <= pow2(-(prev.k + 2));
  // q_k q^{-5/12} <= 2^{-(k+1)}  <=>  (2^{k+1} q_k)^12 <= q^5.
  e.growth_term = pow(pow2(prev.k + 1) * qk, 12) <= pow(q, 5);
  e.rhs_bound = e.rhs <= pow2(-prev.k);
  e.corrected_bound = e.rhs_corrected <= pow2(-prev.k);

  const long qn = prev.q.convert_to<long>();
  std::vector<long> ns;
  if (qn <= n_cap) {
    for (long n = 1; n <= qn; ++n) ns.push_back(n);
  } else {
    for (long i = 1; i <= n_cap; ++i) ns.push_back(std::max(1L, i * qn / n_cap));
  }
  for (long n : ns) {
    for (int i = 0; i < grid; ++i) {
      const double x = static_cast<double>(i) / grid;
      e.sampled_sup = std::max(e.sampled_sup, std::abs(rho_stage_n(next, n, x) - rho_stage_n(prev, n, x)));
    }
  }
  e.n_checked = static_cast<long>(ns.size());
  e.within_stated = e.sampled_sup <= to_double(e.rhs) + 1e-9;
  e.within_corrected = e.sampled_sup <= to_double(e.rhs_corrected) + 1e-9;
  return e;
}

/// stage_estimate, raising ConstructionBug when a link of the exact chain
/// fails or the sampled differences exceed the corrected bound.
inline StageEstimate verify_stage_estimate(const AkStage& prev, const AkStage& next, int grid, long n_cap = 1000) {
  const StageEstimate e = stage_estimate(prev, next, grid, n_cap);
  if (!e.s_bound) throw ConstructionBug("s_{k+1} <= 2 q^{1/3} < q^{1/2} fails");
  if (!e.ell_term) throw ConstructionBug("ell_{k+1} q_k s_{k+1} / q_{k+1} exceeds q_k / q_{k+1}^{5/12}");
  if (!e.c_term) throw ConstructionBug("C_k q_k |d alpha| exceeds 2^{-(k+2)}");
  if (!e.d_term) throw ConstructionBug("D_k q_k |d beta| exceeds 2^{-(k+2)}");
  if (!e.growth_term) throw ConstructionBug("q_k / q_{k+1}^{5/12} exceeds 2^{-(k+1)}");
  if (!e.rhs_bound) throw ConstructionBug("estimate exceeds 2^{-k}");
  if (!e.within_corrected) {
    throw ConstructionBug("sampled difference " + std::to_string(e.sampled_sup) + " exceeds the bound " +
                          std::to_string(to_double(e.rhs_corrected)));
  }
  return e;
}

struct DensityEmpirical {
  std::string status = "skipped";            // against the stated delta: pass, fail or skipped
  std::string status_corrected = "skipped";  // against delta_corrected
  std::string note;
  std::size_t points = 0;   // certified points used
  std::size_t queries = 0;  // cylinder grid points checked
  std::size_t misses = 0;   // queries with no admissible point within the stated delta
  double worst_fiber = 0;   // largest fiber distance to an admissible point
};

struct DensityCertificate {
  int k = 0;
  std::string kind;  // graph or orbit
  double epsilon = 0;
  /// delta as stated: ell_k t_k / r_k + (4 pi / t_k) sum_{j<k} ell_j r_j (+ the orbit term).
  double delta = 0;
  /// delta with 2 pi ell_k t_k / r_k as the first term. Moving x by s changes
  /// |sin(2 pi t x)| by up to 2 pi t |s|, so this is what the argument gives.
  double delta_corrected = 0;
  double radius = 0;
  bool analytic_only = true;
  DensityEmpirical empirical;
};

namespace detail {

/// sum_{j < to} ell_j r_j, rounded up.
inline Rational sum_ell_r(const AkStage& st, std::size_t to) {
  Rational s = 0;
  for (std::size_t j = 0; j < to; ++j) s += st.phi[j].ell.hi * Rational(st.phi[j].r);
  return s;
}

inline DensityCertificate graph_bounds(const AkStage& st) {
  DensityCertificate c;
  c.k = st.k;
  c.epsilon = 1.0 / to_double(st.t);
  const std::size_t last = st.phi.size() - 1;
  Rational below = 0;
  for (std::size_t j = 0; j < last; ++j) below += st.phi[j].ell.hi;
  const Rational main = st.ell.hi * Rational(st.t) / Rational(st.r);
  // (4 pi / t_k) sum_{j<k} ell_j r_j with pi rounded up.
  const Rational extra = two_pi().hi * 2 * sum_ell_r(st, last) / Rational(st.t);
  c.delta = to_double(main + extra);
  c.delta_corrected = to_double(two_pi().hi * main + extra);
  c.radius = to_double(st.ell.lo - below);
  return c;
}

struct CylinderPoint {
  double x;
  Complex z;
};

/// Fiber distance from z to the nearest point of a bucketed cloud, searched
/// ring by ring; infinity for an empty cloud.
class FiberGrid {
 public:
  FiberGrid(double cell, double reach) : cell_(cell), max_ring_(static_cast<long long>(std::ceil(reach / cell)) + 2) {}

  void insert(Complex z) { cells_[key(index(z.real()), index(z.imag()))].push_back(z); }
  bool empty() const { return cells_.empty(); }

  double nearest(Complex z) const {
    const long long a = index(z.real()), b = index(z.imag());
    double best = std::numeric_limits<double>::infinity();
    for (long long ring = 0; ring <= max_ring_; ++ring) {
      // Points in rings beyond this one are at least ring * cell away.
      if (best <= static_cast<double>(ring) * cell_) break;
      for (long long da = -ring; da <= ring; ++da) {
        for (long long db = -ring; db <= ring; ++db) {
          if (std::max(std::llabs(da), std::llabs(db)) != ring) continue;
          auto it = cells_.find(key(a + da, b + db));
          if (it == cells_.end()) continue;
          for (const Complex& w : it->second) best = std::min(best, std::abs(z - w));
        }
      }
    }
    return best;
  }

 private:
  long long index(double v) const { return static_cast<long long>(std::floor(v / cell_)); }
  static long long key(long long a, long long b) { return (a << 32) ^ (b & 0xffffffffLL); }

  double cell_;
  long long max_ring_;
  std::unordered_map<long long, std::vector<Complex>> cells_;
};

/// Every point of the grid (x_i = i / grid, z on a grid x grid lattice of
/// [-R, R]^2 inside the disk of radius R) needs a certified point within
/// epsilon in the base; records the worst fiber distance.
inline DensityEmpirical check_cylinder(const std::vector<CylinderPoint>& pts, const DensityCertificate& c, int grid) {
  DensityEmpirical out;
  out.points = pts.size();
  const double radius = std::max(c.radius, 0.0);
  double reach = radius;
  for (const auto& p : pts) reach = std::max(reach, std::abs(p.z));
  for (int i = 0; i < grid; ++i) {
    const double x = static_cast<double>(i) / grid;
    FiberGrid cloud(std::max(c.delta, 1e-3), 2 * reach);
    for (const auto& p : pts) {
      if (circle_distance(p.x, x) <= c.epsilon) cloud.insert(p.z);
    }
    for (int a = 0; a < grid; ++a) {
      for (int b = 0; b < grid; ++b) {
        const double span = 2 * radius / std::max(1, grid - 1);
        const Complex z(-radius + span * a, -radius + span * b);
        if (std::abs(z) > radius) continue;
        ++out.queries;
        const double d = cloud.nearest(z);
        if (d > c.delta) ++out.misses;
        out.worst_fiber = std::max(out.worst_fiber, d);
      }
    }
  }
  out.status = out.misses == 0 ? "pass" : "fail";
  out.status_corrected = out.worst_fiber <= c.delta_corrected ? "pass" : "fail";
  return out;
}

inline void raise_if_failed(const DensityCertificate& c) {
  if (c.empirical.status_corrected == "fail") {
    throw ConstructionBug(c.kind + " density fails at stage " + std::to_string(c.k) + ": fiber distance " +
                          std::to_string(c.empirical.worst_fiber) + " > " + std::to_string(c.delta_corrected));
  }
}

}  // namespace detail

inline constexpr long kOrbitEnumerationCap = 1000000;
inline constexpr long kGraphSampleCap = 1L << 22;
inline constexpr int kCylinderGridCap = 256;

/// The graph of phi_k is (1/t_k, delta)-dense in T x Ball(0, ell_k - sum_{j<k} ell_j).
/// With grid > 0 the claim is tested on graph points x' = i / M, with M
/// large enough that consecutive graph points are within delta / 4 of each
/// other. Only a failure of the corrected delta raises.
inline DensityCertificate graph_density(const AkStage& st, int grid = 0) {
  DensityCertificate c = detail::graph_bounds(st);
  c.kind = "graph";
  if (grid <= 0) return c;
  if (grid > kCylinderGridCap) throw InputError("cylinder grid is capped at 256");
  const double want = std::ceil(4 * st.C.approx() / c.delta);
  long samples = 1024;
  while (samples < want && samples <= kGraphSampleCap) samples *= 2;
  if (samples > kGraphSampleCap) {
    c.empirical.note = "graph sampling beyond the cap; analytic certificate only";
    return c;
  }
  std::vector<detail::CylinderPoint> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (long i = 0; i < samples; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(samples);
    pts.push_back({x, phi_eval(st, x)});
  }
  c.empirical = detail::check_cylinder(pts, c, grid);
  c.analytic_only = false;
  detail::raise_if_failed(c);
  return c;
}

/// {F_k^n(0, 0) : 1 <= n <= q_k} is dense like the graph, with the extra
/// fiber allowance (16 pi / q_k^{2/3}) sum_{j<=k} ell_j r_j. With grid > 0
/// and q_k <= 10^6 the orbit is enumerated: base points exactly, fiber
/// points by iterating F_k in double precision.
inline DensityCertificate orbit_density(const AkStage& st, int grid = 0) {
  DensityCertificate c = detail::graph_bounds(st);
  c.kind = "orbit";
  // q^{2/3} rounded down through its cube root.
  const Rational q23 = pow(root_enclosure(st.q, 1, 3).lo, 2);
  const double orbit_term = to_double(two_pi().hi * 8 * detail::sum_ell_r(st, st.phi.size()) / q23);
  c.delta += orbit_term;
  c.delta_corrected += orbit_term;
  if (grid <= 0) return c;
  if (grid > kCylinderGridCap) throw InputError("cylinder grid is capped at 256");
  if (st.q > kOrbitEnumerationCap) {
    c.empirical.note = "q_k above the enumeration cap; analytic certificate only";
    return c;
  }
  const long q = st.q.convert_to<long>();
  const Complex lambda = Angle::exact(st.beta).phase();
  std::vector<detail::CylinderPoint> pts;
  pts.reserve(static_cast<std::size_t>(q));
  Rational x = 0;
  Complex z{};
  for (long n = 1; n <= q; ++n) {
    z = lambda * z + rho_stage(st, to_double(x));
    x = frac(x + st.alpha);
    pts.push_back({to_double(x), z});
  }
  c.empirical = detail::check_cylinder(pts, c, grid);
  c.analytic_only = false;
  detail::raise_if_failed(c);
  return c;
}

struct IndependenceReport {
  int k = 0;
  long bound = 0;
  std::size_t triples = 0;
  /// Triples with p alpha_k + q beta_k + r = 0, and whether q_k | p + q r_k for each.
  std::vector<std::array<long, 3>> zero_triples;
  std::vector<bool> zero_divisible;
  Rational smallest_nonzero;  // min |p alpha_k + q beta_k + r| over the other triples
  bool dichotomy = false;
  /// T_k >= sum_{j>=k} (|d alpha_j| + |d beta_j|) from (5') and q_{j+1} > q_j^3.
  Rational tail;
  bool tail_bound = false;  // bound * T_k < 1 / q_k
  bool history_ok = false;  // (5') on every constructed step
};

/// For all (p, q, r) != 0 with entries in [-B, B], either
/// p alpha_k + q beta_k + r = 0 or its absolute value is >= 1/q_k, and the
/// future drift of alpha, beta is too small to close that gap.
inline IndependenceReport independence_check(const std::vector<AkStage>& stages, long bound) {
  if (stages.size() < 2) throw InputError("independence_check needs at least two stages");
  if (bound < 1) throw InputError("independence_check needs a bound >= 1");
  const AkStage& st = stages.back();
  IndependenceReport rep;
  rep.k = st.k;
  rep.bound = bound;
  const Rational gap(Integer(1), st.q);
  rep.dichotomy = true;
  bool any_nonzero = false;
  for (long p = -bound; p <= bound; ++p) {
    for (long q = -bound; q <= bound; ++q) {
      const Rational partial = st.alpha * p + st.beta * q;
      for (long r = -bound; r <= bound; ++r) {
        if (p == 0 && q == 0 && r == 0) continue;
        ++rep.triples;
        const Rational v = abs(partial + r);
        if (v == 0) {
          rep.zero_triples.push_back({p, q, r});
          rep.zero_divisible.push_back(mod_floor(Integer(p) + Integer(q) * st.r, st.q) == 0);
          continue;
        }
        if (!any_nonzero || v < rep.smallest_nonzero) rep.smallest_nonzero = v;
        any_nonzero = true;
        if (v < gap) rep.dichotomy = false;
      }
    }
  }
  rep.tail = pow2(-(st.k + 1)) * (1 + gap * gap) / Rational(st.q * st.k);
  rep.tail_bound = rep.tail * bound < gap;
  const QHistory qs = q_history(stages);
  rep.history_ok = true;
  for (std::size_t j = 1; j < stages.size(); ++j) {
    const QHistory before(qs.begin(), qs.begin() + static_cast<long>(j));
    if (!check_conditions(stages[j - 1], before, stages[j]).c5p) rep.history_ok = false;
  }
  if (!rep.dichotomy) throw ConstructionBug("a nonzero combination is closer than 1/q_k to zero");
  return rep;
}

}  // namespace vortexlab
