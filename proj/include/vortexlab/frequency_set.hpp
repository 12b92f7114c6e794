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


// The frequency sets FS_q(2, 3) = {(s p/q, s p r/q) mod 1 : 1 <= s <= 2t}
// with t = floor(q^{1/3}), r = floor(q^{1/2}) and p the inverse of t mod q.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vortexlab/errors.hpp"
#include "vortexlab/exact.hpp"

namespace vortexlab {

struct FsEntry {
  Integer q;
  Integer t;
  Integer r;
  Integer p;  // 0 when gcd(q, t) > 1

  bool operator==(const FsEntry&) const = default;
};

inline FsEntry fs_entry(const Integer& q) {
  if (q < 1) throw InputError("fs_entry needs q >= 1");
  FsEntry e{q, icbrt(q), isqrt(q), 0};
  if (auto inv = mod_inverse(e.t, q)) e.p = *inv;
  return e;
}

/// The entry of q = m^6 + 2m^4 + m^2 + 1 from the closed forms
/// t = m^2, r = m^3 + m, p = m^6 + m^4 - m^2.
inline FsEntry fs_family(long m) {
  if (m < 1) throw InputError("fs_family needs m >= 1");
  const Integer mm(m);
  const Integer m2 = mm * mm, m4 = m2 * m2, m6 = m4 * m2;
  return {m6 + 2 * m4 + m2 + 1, m2, m2 * mm + mm, m6 + m4 - m2};
}

/// The pair (s p/q, s p r/q) mod 1.
inline std::pair<Rational, Rational> fs_pair(const FsEntry& e, const Integer& s) {
  return {frac(Rational(s * e.p, e.q)), frac(Rational(s * e.p * e.r, e.q))};
}

/// FS_q(2, 3) in order of s; empty when p = 0.
inline std::vector<std::pair<Rational, Rational>> fs_q_set(const FsEntry& e) {
  std::vector<std::pair<Rational, Rational>> out;
  if (e.p == 0) return out;
  for (Integer s = 1; s <= 2 * e.t; ++s) out.push_back(fs_pair(e, s));
  return out;
}

inline std::vector<std::pair<Rational, Rational>> fs_q_set(const Integer& q) { return fs_q_set(fs_entry(q)); }

struct FsCoverage {
  int grid = 0;
  std::vector<Integer> qs;                   // entries scanned, in order
  std::size_t pairs = 0;
  std::vector<std::vector<bool>> covered;    // covered[i][j]: cell [i/n, (i+1)/n) x [j/n, (j+1)/n)
  std::vector<std::pair<int, int>> uncovered;
  std::optional<long> complete_at;           // family scans: first m with full coverage

  bool complete() const { return uncovered.empty(); }
};

namespace detail {

inline void mark(FsCoverage& c, const FsEntry& e) {
  c.qs.push_back(e.q);
  if (e.p == 0) return;
  for (Integer s = 1; s <= 2 * e.t; ++s) {
    // Cell indices floor(n * frac(s p / q)), in integers.
    const Integer a = (s * e.p) % e.q, b = (s * e.p * e.r) % e.q;
    const auto i = static_cast<std::size_t>(((a * c.grid) / e.q).convert_to<long>());
    const auto j = static_cast<std::size_t>(((b * c.grid) / e.q).convert_to<long>());
    c.covered[i][j] = true;
    ++c.pairs;
  }
}

inline void finish(FsCoverage& c) {
  c.uncovered.clear();
  for (int i = 0; i < c.grid; ++i) {
    for (int j = 0; j < c.grid; ++j) {
      if (!c.covered[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) c.uncovered.emplace_back(i, j);
    }
  }
}

inline FsCoverage empty_coverage(int grid) {
  if (grid < 1) throw InputError("density scan needs grid >= 1");
  FsCoverage c;
  c.grid = grid;
  c.covered.assign(static_cast<std::size_t>(grid), std::vector<bool>(static_cast<std::size_t>(grid), false));
  return c;
}

}  // namespace detail

/// Cells of the grid x grid partition of [0, 1)^2 hit by FS_q for q in qs.
inline FsCoverage fs_density_scan(const std::vector<Integer>& qs, int grid) {
  FsCoverage c = detail::empty_coverage(grid);
  for (const Integer& q : qs) detail::mark(c, fs_entry(q));
  detail::finish(c);
  return c;
}

/// Accumulates the family entries m = m_min, m_min + 1, ... and stops at the
/// first m that completes the coverage, or after m_max.
inline FsCoverage fs_density_scan_family(long m_min, long m_max, int grid) {
  if (m_min < 1 || m_max < m_min) throw InputError("family scan needs 1 <= m_min <= m_max");
  FsCoverage c = detail::empty_coverage(grid);
  for (long m = m_min; m <= m_max; ++m) {
    detail::mark(c, fs_family(m));
    detail::finish(c);
    if (c.complete()) {
      c.complete_at = m;
      break;
    }
  }
  return c;
}

}  // namespace vortexlab
