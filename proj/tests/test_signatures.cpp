#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "scat/signatures.hpp"

using namespace scat;

TEST(Composition, RejectsNonpositiveParts) {
  EXPECT_THROW(Composition({2, 0, 1}), std::invalid_argument);
  EXPECT_THROW(WeakComposition({1, -1}), std::invalid_argument);
  EXPECT_NO_THROW(WeakComposition({0, 0, 3}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
}

TEST(Composition, ExcessAndLength) {
  const Composition s{3, 4, 4, 2, 5};
  EXPECT_EQ(s.sum(), 18);
  EXPECT_EQ(s.length(), 5u);
  EXPECT_EQ(s.excess(), 13);
  EXPECT_TRUE(s.all_at_least(2));
  EXPECT_FALSE(Composition({2, 1}).all_at_least(2));
}

TEST(Refines, IsPartialOrderOnCompositionsUpToSeven) {
  for (int n = 0; n <= 7; ++n) {
    const auto all = compositions_of(n);
    for (const auto& x : all) {
      EXPECT_TRUE(refines(x, x));
      for (const auto& y : all) {
        if (refines(x, y) && refines(y, x)) {
          EXPECT_EQ(x, y);
        }
        if (!refines(x, y)) continue;
        for (const auto& z : all) {
          if (refines(y, z)) {
            EXPECT_TRUE(refines(x, z));
          }
        }
      }
    }
  }
}

TEST(Refines, MatchesBlockSumDefinition) {
  // nu's partial sums must be a subset of mu's
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : compositions_of(n))
      for (const auto& nu : compositions_of(n)) {
        std::set<int> pm, pn;
        int acc = 0;
        for (int x : mu) pm.insert(acc += x);
        acc = 0;
        for (int x : nu) pn.insert(acc += x);
        const bool sub = std::includes(pm.begin(), pm.end(), pn.begin(), pn.end());
        EXPECT_EQ(refines(mu, nu), sub) << to_string(mu) << " " << to_string(nu);
      }
}

TEST(Dominance, PartialOrderAndDiff) {
  std::vector<WeakComposition> all;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4; ++c)
        if (a + b + c == 4) all.push_back(WeakComposition({a, b, c}));
  for (const auto& x : all) {
    EXPECT_TRUE(dominance_leq(x, x));
    for (const auto& y : all) {
      // negative entries are not representable, so the diff refuses them
      if (dominance_leq(x, y)) {
        for (int d : dominance_diff(y, x)) EXPECT_GE(d, 0);
      } else {
        EXPECT_THROW(dominance_diff(y, x), std::invalid_argument);
      }
      if (dominance_leq(x, y) && dominance_leq(y, x)) {
        EXPECT_EQ(x, y);
      }
      for (const auto& z : all) {
        if (dominance_leq(x, y) && dominance_leq(y, z)) {
          EXPECT_TRUE(dominance_leq(x, z));
        }
      }
    }
  }
}

TEST(Concat, AssociativeWithEmptyIdentity) {
  const Composition e{}, x{1, 2}, y{3}, z{2, 2, 1};
  EXPECT_EQ(concat(concat(x, y), z), concat(x, concat(y, z)));
  EXPECT_EQ(concat(e, x), x);
  EXPECT_EQ(concat(x, e), x);
  EXPECT_EQ(concat(x, y), Composition({1, 2, 3}));
}

TEST(RationalSignature, KnownValues) {
  EXPECT_EQ(rational_signature(5, 8), Composition({2, 3, 2, 3, 2}));
  EXPECT_EQ(rational_signature(5, 13), Composition({3, 4, 3, 4, 3}));
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k)
      EXPECT_EQ(rational_signature(n, k * n + 1),
                Composition(std::vector<int>(n, k + 1)));
  EXPECT_THROW(rational_signature(4, 6), std::invalid_argument);
}

TEST(RationalSignature, LengthAndLeafLaw) {
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; b <= 12; ++b) {
      if (oracle::gcd(a, b) != 1) continue;
      const auto s = rational_signature(a, b);
      EXPECT_EQ(static_cast<long>(s.length()), a);
      EXPECT_EQ(s.sum() - static_cast<long>(s.length()) + 1, b);
    }
}

TEST(RationalSignature, PartialSumsFollowDiagonal) {
  // sum_{i <= k} (s_i - 1) = floor(b k / a)
  for (long a = 1; a <= 9; ++a)
    for (long b = 1; b <= 9; ++b) {
      if (oracle::gcd(a, b) != 1) continue;
      const auto s = rational_signature(a, b);
      long acc = 0;
      for (long i = 1; i < a; ++i) {
        acc += s[static_cast<std::size_t>(i - 1)] - 1;
        EXPECT_EQ(acc, (b * i) / a) << a << "," << b << " i=" << i;
      }
    }
}

TEST(Lambda, RunningExample) {
  EXPECT_EQ(lambda_of(Composition({3, 4, 4, 2, 5})), Partition({9, 8, 5, 2}));
  EXPECT_EQ(lambda_of(Composition({1, 1, 3})), Partition({0, 0}));
}

TEST(Generation, DominatedMatchesFilter) {
  const WeakComposition bound{2, 3, 3, 1, 4};
  std::vector<WeakComposition> got;
  for_each_dominated(bound, [&](const WeakComposition& m) { got.push_back(m); });
  EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  std::size_t expect = 0;
  std::vector<int> cur(5, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == 4) {
      cur[4] = left;
      if (dominance_leq(WeakComposition(cur), bound)) ++expect;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, 13);
  EXPECT_EQ(got.size(), expect);
}

TEST(Generation, CompositionCounts) {
  EXPECT_EQ(compositions_of(0).size(), 1u);
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(compositions_of(n).size(), oracle::ipow(2, n - 1));
  EXPECT_EQ(compositions_up_to(4).size(), 1u + 1 + 2 + 4 + 8);
}

TEST(Text, RoundTrip) {
  EXPECT_EQ(parse_composition("3,4,4,2,5"), Composition({3, 4, 4, 2, 5}));
  EXPECT_EQ(parse_composition("(3, 4)"), Composition({3, 4}));
  EXPECT_EQ(parse_composition(""), Composition{});
  EXPECT_EQ(to_string(Composition({3, 4})), "3,4");
  EXPECT_EQ(parse_weak_composition("0,2,6,0,5"), WeakComposition({0, 2, 6, 0, 5}));
  EXPECT_THROW(parse_composition("3,x"), std::invalid_argument);
  EXPECT_THROW(parse_composition("3,0"), std::invalid_argument);
}
