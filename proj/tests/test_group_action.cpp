#include <gtest/gtest.h>

#include <set>

#include "altruns/enumerate.hpp"
#include "altruns/error.hpp"
#include "altruns/group_action.hpp"
#include "altruns/statistics.hpp"
#include "oracle.hpp"

using namespace altruns;

namespace {

SignedPermutation w(std::vector<int> v) { return SignedPermutation::make_checked(std::move(v)); }

std::vector<SignedPermutation> all_of_b(int n) { return enumerate_class(n, parse_selector("B:any:any")); }

}  // namespace

TEST(SgnFlip, Examples) {
  const auto pi = w({1, 3, 2, -6, -4, 5});
  EXPECT_EQ(sgn_flip(pi, 1), w({-1, -3, -2, 6, 4, -5}));
  EXPECT_EQ(sgn_flip(pi, 4), w({1, 3, 2, 6, 4, -5}));
  EXPECT_EQ(sgn_flip(pi, 5), w({1, 3, 2, -6, 4, -5}));
  EXPECT_EQ(sgn_flip(sgn_flip(pi, 2), 2), pi);
}

TEST(SgnFlip, IndexOutOfRange) {
  for (int k : {0, 7, -1}) {
    try {
      sgn_flip(SignedPermutation::identity(6), k);
      FAIL() << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::index_out_of_range);
    }
  }
}

TEST(GeneratorSet, Examples) {
  EXPECT_EQ(generator_set(6).positions, (std::vector<int>{3, 5}));
  EXPECT_EQ(generator_set(6).m(), 2);
  EXPECT_EQ(generator_set(5).positions, (std::vector<int>{2, 4}));
  EXPECT_EQ(generator_set(5).m(), 2);
  EXPECT_TRUE(generator_set(2).positions.empty());
  EXPECT_TRUE(generator_set(1).positions.empty());
  EXPECT_EQ(generator_set(3).positions, (std::vector<int>{2}));
  EXPECT_EQ(generator_set(4).positions, (std::vector<int>{3}));
}

TEST(GeneratorSet, Invariants) {
  for (int n = 1; n <= 40; ++n) {
    const auto g = generator_set(n);
    EXPECT_EQ(g.n, n);
    EXPECT_EQ(g.m(), (n - 1) / 2);
    EXPECT_TRUE(std::is_sorted(g.positions.begin(), g.positions.end()));
    for (int p : g.positions) {
      EXPECT_GE(p, 2);
      EXPECT_LE(p, n - 1);
      EXPECT_EQ((n - p + 1) % 2, 0) << "n=" << n << " p=" << p;
    }
  }
}

TEST(OrbitClosure, StandardGeneratorsCloseEverySelector) {
  for (int n = 1; n <= 12; ++n)
    for (auto s : standard_selectors()) EXPECT_TRUE(is_orbit_closed(s, generator_set(n)));
}

TEST(OrbitClosure, DetectsBrokenGenerators) {
  const GeneratorSet odd_flip{4, {2}};  // flips three entries
  EXPECT_FALSE(is_orbit_closed(parse_selector("D:any:any"), odd_flip));
  EXPECT_FALSE(is_orbit_closed(parse_selector("B:any:even"), odd_flip));
  EXPECT_TRUE(is_orbit_closed(parse_selector("B:pos:any"), odd_flip));
  const GeneratorSet touches_first{4, {1}};
  EXPECT_FALSE(is_orbit_closed(parse_selector("B:pos:any"), touches_first));
  EXPECT_TRUE(is_orbit_closed(parse_selector("D:any:even"), touches_first));
}

TEST(Canonicalize, Examples) {
  const auto g6 = generator_set(6);
  const auto already = w({1, 2, 3, -4, 5, 6});
  EXPECT_EQ(canonicalize(already, g6).representative, already);
  EXPECT_TRUE(canonicalize(already, g6).flips_applied.empty());

  const auto c = canonicalize(w({1, 2, -3, 4, 5, 6}), g6);
  EXPECT_EQ(c.representative, w({1, 2, 3, -4, 5, 6}));
  EXPECT_EQ(c.flips_applied, (std::vector<int>{3, 5}));
}

TEST(Canonicalize, IsConstantOnOrbits) {
  for (int n = 1; n <= 6; ++n) {
    const auto g = generator_set(n);
    for (const auto& pi : all_of_b(n)) {
      const auto c = canonicalize(pi, g);
      ASSERT_TRUE(is_canonical(c.representative, g));
      ASSERT_EQ(canonicalize(c.representative, g).representative, c.representative);
      ASSERT_TRUE(canonicalize(c.representative, g).flips_applied.empty());
      for (int p : g.positions) ASSERT_EQ(canonicalize(sgn_flip(pi, p), g).representative, c.representative);
    }
  }
}

TEST(Orbit, SizesAndFreeness) {
  EXPECT_EQ(orbit(w({2, 1}), generator_set(2)), std::vector<SignedPermutation>{w({2, 1})});
  EXPECT_EQ(orbit(SignedPermutation::identity(4), generator_set(4)).size(), 2u);
  EXPECT_EQ(orbit(SignedPermutation::identity(5), generator_set(5)).size(), 4u);
  for (int n = 1; n <= 6; ++n) {
    const auto g = generator_set(n);
    for (const auto& pi : all_of_b(n)) {
      auto members = orbit(pi, g);
      ASSERT_EQ(members.size(), std::size_t{1} << g.m());
      std::set<SignedPermutation> distinct(members.begin(), members.end());
      ASSERT_EQ(distinct.size(), members.size());
      for (const auto& q : members) ASSERT_EQ(negs_count(q) % 2, negs_count(pi) % 2);
    }
  }
}

TEST(Orbit, RefusesHugeRank) {
  GeneratorSet g{50, {}};
  for (int p = 3; p <= 49; p += 2) g.positions.push_back(p);
  ASSERT_GT(g.m(), kMaxMaterializedOrbitRank);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 1);
  try {
    orbit(SignedPermutation::make_checked(v), g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::resource_cap);
  }
}

TEST(OrbitMinRuns, Examples) {
  const auto s = orbit_min_runs(SignedPermutation::identity(3), generator_set(3));
  EXPECT_EQ(s.min_runs, 1);
  EXPECT_EQ(s.m, 1);
  EXPECT_EQ(s.polynomial(), (IntPolynomial{0, 1, 1}));

  const auto tiny = orbit_min_runs(w({2, -1}), generator_set(2));
  EXPECT_EQ(tiny.min_runs, altruns_b(w({2, -1})));
  EXPECT_EQ(tiny.polynomial(), IntPolynomial::monomial(static_cast<std::size_t>(tiny.min_runs)));
}

TEST(OrbitMinRuns, RejectsNonCanonical) {
  try {
    orbit_min_runs(w({1, -2, 3}), generator_set(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_canonical);
  }
}

TEST(OrbitMinRuns, OrbitPolynomialIsExactAndMinimumUnique) {
  for (int n = 1; n <= 6; ++n) {
    const auto g = generator_set(n);
    for (const auto& pi : enumerate_class(n, parse_selector("B:pos:any"))) {
      if (!is_canonical(pi, g)) continue;
      IntPolynomial exact;
      std::map<int, int> by_runs;
      for (const auto& q : orbit(pi, g)) {
        exact.add_term(static_cast<std::size_t>(oracle::runs_type_b(q.values())), 1);
        ++by_runs[oracle::runs_type_b(q.values())];
      }
      const auto summary = orbit_min_runs(pi, g);
      ASSERT_EQ(exact, summary.polynomial()) << format_window(pi);
      ASSERT_EQ(by_runs.begin()->first, summary.min_runs);
      ASSERT_EQ(by_runs.begin()->second, 1);
    }
  }
}

// Executable forms of the action lemmas.

TEST(ActionLemmas, InvolutionAndCommutation) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : all_of_b(n)) {
      for (int i = 1; i <= n; ++i) {
        ASSERT_EQ(sgn_flip(sgn_flip(pi, i), i), pi);
        for (int j = 1; j <= n; ++j) ASSERT_EQ(sgn_flip(sgn_flip(pi, j), i), sgn_flip(sgn_flip(pi, i), j));
      }
    }
  }
}

TEST(ActionLemmas, InteriorFlipChangesRunsByExactlyOne) {
  for (int n = 3; n <= 6; ++n)
    for (const auto& pi : all_of_b(n))
      for (int i = 2; i <= n - 1; ++i) ASSERT_EQ(std::abs(altruns_b(sgn_flip(pi, i)) - altruns_b(pi)), 1);
}

TEST(ActionLemmas, FlipAtOneCanKeepRuns) {
  // Position 1 is outside the lemma's range: negating everything keeps altruns_B.
  const auto pi = w({2, -1, 3});
  EXPECT_EQ(altruns_b(sgn_flip(pi, 1)), altruns_b(pi));
}

TEST(ActionLemmas, RunChangeIsConsistentAcrossGenerators) {
  for (int n = 3; n <= 6; ++n) {
    const auto g = generator_set(n);
    for (const auto& pi : all_of_b(n)) {
      for (int i : g.positions) {
        if (altruns_b(sgn_flip(pi, i)) != altruns_b(pi) + 1) continue;
        for (int j : g.positions) {
          if (i == j) continue;
          ASSERT_EQ(altruns_b(sgn_flip(sgn_flip(pi, j), i)), altruns_b(sgn_flip(pi, j)) + 1);
        }
      }
    }
  }
}

TEST(ActionLemmas, GeneratorsPreserveParities) {
  for (int n = 1; n <= 6; ++n) {
    const auto g = generator_set(n);
    for (const auto& pi : all_of_b(n)) {
      for (int p : g.positions) {
        const auto q = sgn_flip(pi, p);
        ASSERT_EQ(inv_b(q) % 2, inv_b(pi) % 2);
        ASSERT_EQ(inv_d(q) % 2, inv_d(pi) % 2);
        ASSERT_EQ(negs_count(q) % 2, negs_count(pi) % 2);
      }
    }
  }
}

TEST(BonaComplement, Examples) {
  EXPECT_EQ(bona_complement(w({1, 2, -3, -4}), 3), w({1, 2, -4, -3}));
  EXPECT_EQ(bona_complement(w({3, 1, -2}), 3), w({3, 1, -2}));
  EXPECT_EQ(bona_complement(w({2, 4, -1, 3}), 1), w({3, -1, 4, 2}));
  EXPECT_NE(inv_b(w({1, 2, -3, -4})) % 2, inv_b(bona_complement(w({1, 2, -3, -4}), 3)) % 2);
}

TEST(BonaComplement, InvolutionOnPrefixFixedSuffix) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : all_of_b(n)) {
      for (int i = 1; i <= n; ++i) {
        const auto c = bona_complement(pi, i);
        ASSERT_EQ(bona_complement(c, i), pi);
        for (int k = 1; k < i; ++k) ASSERT_EQ(c.at(k), pi.at(k));
      }
      ASSERT_EQ(bona_complement(pi, n), pi);
    }
  }
}

TEST(BonaComplement, IndexOutOfRange) {
  try {
    bona_complement(SignedPermutation::identity(3), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::index_out_of_range);
  }
}
