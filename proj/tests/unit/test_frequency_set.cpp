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
#include <set>

#include "vortexlab/frequency_set.hpp"

namespace vortexlab {
namespace {

struct Plain {
  long q, t, r, p;
};

// Brute-force floors and inverse in machine integers.
Plain plain_entry(long q) {
  Plain e{q, 0, 0, 0};
  while ((e.t + 1) * (e.t + 1) * (e.t + 1) <= q) ++e.t;
  while ((e.r + 1) * (e.r + 1) <= q) ++e.r;
  for (long p = 1; p < q; ++p) {
    if ((p * e.t) % q == 1) {
      e.p = p;
      break;
    }
  }
  return e;
}

TEST(FsEntry, NoInverseGivesEmptySet) {
  const FsEntry e = fs_entry(8);
  EXPECT_EQ(e.t, 2);
  EXPECT_EQ(e.p, 0);
  EXPECT_TRUE(fs_q_set(e).empty());
}

TEST(FsEntry, QIs101) {
  const FsEntry e = fs_entry(101);
  EXPECT_EQ(e.t, 4);
  EXPECT_EQ(e.r, 10);
  EXPECT_EQ(e.p, 76);
  const auto set = fs_q_set(e);
  ASSERT_EQ(set.size(), 8u);
  EXPECT_EQ(set[0].first, Rational(76, 101));
  EXPECT_EQ(set[0].second, Rational(53, 101));
}

TEST(FsEntry, QIs5) {
  const auto set = fs_q_set(Integer(5));
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set[0], std::make_pair(Rational(1, 5), Rational(2, 5)));
  EXPECT_EQ(set[1], std::make_pair(Rational(2, 5), Rational(4, 5)));
}

TEST(FsEntry, MatchesBruteForce) {
  for (long q = 1; q <= 3000; q += 7) {
    const Plain want = plain_entry(q);
    const FsEntry got = fs_entry(q);
    ASSERT_EQ(got.t, want.t) << q;
    ASSERT_EQ(got.r, want.r) << q;
    ASSERT_EQ(got.p, want.p) << q;
  }
  EXPECT_THROW(fs_entry(0), InputError);
}

TEST(FsFamily, SmallMembers) {
  EXPECT_EQ(fs_family(1), fs_entry(5));
  EXPECT_EQ(fs_family(2), fs_entry(101));
  const FsEntry e = fs_family(3);
  EXPECT_EQ(e.q, 901);
  EXPECT_EQ(e.t, 9);
  EXPECT_EQ(e.r, 30);
  EXPECT_EQ(e.p, 801);
}

TEST(FsFamily, ClosedFormsAgreeWithGenericEntry) {
  for (long m = 1; m <= 50; ++m) {
    const FsEntry e = fs_family(m);
    EXPECT_EQ(e, fs_entry(e.q)) << m;
    EXPECT_EQ(mod_floor(e.p * e.t, e.q), 1) << m;
  }
  EXPECT_THROW(fs_family(0), InputError);
}

TEST(FsFamily, PairsLieOnTheLatticeLine) {
  // beta = r alpha mod 1 for every element.
  for (long m = 1; m <= 6; ++m) {
    const FsEntry e = fs_family(m);
    const auto set = fs_q_set(e);
    EXPECT_EQ(set.size(), static_cast<std::size_t>(2 * m * m));
    for (const auto& [a, b] : set) EXPECT_EQ(b, frac(a * e.r));
  }
}

std::set<std::pair<long, long>> plain_cells(long m_max, long grid) {
  std::set<std::pair<long, long>> cells;
  for (long m = 1; m <= m_max; ++m) {
    const long q = m * m * m * m * m * m + 2 * m * m * m * m + m * m + 1;
    const long t = m * m, r = m * m * m + m, p = m * m * m * m * m * m + m * m * m * m - m * m;
    for (long s = 1; s <= 2 * t; ++s) {
      const long a = (s * p) % q;
      const long b = static_cast<long>((static_cast<__int128>(a) * r) % q);
      cells.insert({a * grid / q, b * grid / q});
    }
  }
  return cells;
}

TEST(FsDensity, FamilyCompletesTheTenGridAtTen) {
  const FsCoverage c = fs_density_scan_family(1, 64, 10);
  ASSERT_TRUE(c.complete_at);
  EXPECT_EQ(*c.complete_at, 10);
  EXPECT_TRUE(c.complete());
  // Independent cell count: 9 entries leave a hole, 10 do not.
  EXPECT_LT(plain_cells(9, 10).size(), 100u);
  EXPECT_EQ(plain_cells(10, 10).size(), 100u);
}

TEST(FsDensity, CoverageIsMonotoneInTheRange) {
  const FsCoverage partial = fs_density_scan_family(1, 9, 10);
  EXPECT_FALSE(partial.complete_at);
  EXPECT_EQ(partial.uncovered.size(), 100 - plain_cells(9, 10).size());
  const FsCoverage late = fs_density_scan_family(10, 64, 10);
  ASSERT_TRUE(late.complete_at);
  EXPECT_GE(*late.complete_at, 10);
}

TEST(FsDensity, UnitGridAndSmallQ) {
  EXPECT_TRUE(fs_density_scan({Integer(5)}, 1).complete());
  const FsCoverage c = fs_density_scan({Integer(5)}, 10);
  EXPECT_EQ(c.pairs, 2u);
  EXPECT_EQ(c.uncovered.size(), 98u);
  EXPECT_FALSE(fs_density_scan({Integer(8)}, 1).complete());
  EXPECT_THROW(fs_density_scan({}, 0), InputError);
  EXPECT_THROW(fs_density_scan_family(5, 4, 10), InputError);
}

}  // namespace
}  // namespace vortexlab
