#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "scat/enumeration.hpp"

using namespace scat;

TEST(Determinant, SmallMatrices) {
  EXPECT_EQ(determinant({}), 1);
  EXPECT_EQ(determinant({{BigInt(7)}}), 7);
  EXPECT_EQ(determinant({{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}), 0);
  EXPECT_EQ(determinant({{0, 0, 1}, {0, 2, 0}, {3, 0, 0}}), -6);
}

TEST(Kreweras, MatchesBruteForceFitting) {
  std::vector<int> lam;
  std::function<void(std::size_t, int)> rec = [&](std::size_t len, int cap) {
    EXPECT_EQ(kreweras_fitting_count(Partition(lam)), oracle::fitting_partitions(lam))
        << join_ints(lam);
    if (len == 4) return;
    for (int v = 0; v <= cap; ++v) {
      lam.push_back(v);
      rec(len + 1, v);
      lam.pop_back();
    }
  };
  rec(0, 5);
  EXPECT_EQ(kreweras_fitting_count(Partition({9, 8, 5, 2})),
            count_recurrence(Composition({3, 4, 4, 2, 5})));
}

TEST(Counts, ThreeMethodsAgreeUpToNine) {
  for (const auto& s : compositions_up_to(9)) {
    const BigInt brute = oracle::trees(s.parts()).size();
    EXPECT_EQ(count_recurrence(s), brute) << to_string(s);
    EXPECT_EQ(count_determinant(s), brute) << to_string(s);
    EXPECT_EQ(enumerate_trees(s).size(), brute) << to_string(s);
  }
}

TEST(Counts, ClassicalCatalan) {
  const int cat[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 7; ++n) {
    const Composition s(std::vector<int>(n, 2));
    EXPECT_EQ(count_recurrence(s), cat[n]);
    EXPECT_EQ(count_determinant(s), cat[n]);
  }
  EXPECT_EQ(count_recurrence(Composition({3, 4, 3})), 15);
}

TEST(Counts, RationalCatalan) {
  for (long a = 1; a <= 13; ++a)
    for (long b = 1; a + b <= 14; ++b) {
      if (oracle::gcd(a, b) != 1) continue;
      const auto s = rational_signature(a, b);
      const BigInt want = oracle::binom(a + b, a) / (a + b);
      EXPECT_EQ(rational_catalan(a, b), want);
      EXPECT_EQ(count_recurrence(s), want) << a << "," << b;
      EXPECT_EQ(count_determinant(s), want) << a << "," << b;
    }
}

TEST(Counts, LargeSignatureIsExact) {
  const Composition s(std::vector<int>(40, 2));
  BigInt cat = binomial(80, 40) / 41;
  EXPECT_EQ(count_recurrence(s), cat);
  EXPECT_EQ(count_determinant(s), cat);
}

TEST(CountCache, ConcurrentLookupsAgree) {
  CountCache cache;
  const auto sigs = compositions_up_to(8);
  std::vector<std::thread> pool;
  std::atomic<int> bad{0};
  for (int k = 0; k < 4; ++k)
    pool.emplace_back([&] {
      for (const auto& s : sigs)
        if (cache.get(s) != count_recurrence(s)) ++bad;
    });
  for (auto& th : pool) th.join();
  EXPECT_EQ(bad.load(), 0);
  EXPECT_EQ(cache.get(Composition{}), 1);
  EXPECT_EQ(cache.size(), sigs.size() - 1);
}

TEST(Narayana, ClassicalValues) {
  EXPECT_EQ(classical_narayana(4, 2), 6);
  EXPECT_THROW(classical_narayana(3, 0), std::invalid_argument);
  for (int n = 1; n <= 6; ++n) {
    const Composition s(std::vector<int>(n, 2));
    for (auto st : all_narayana_statistics) {
      const auto dist = narayana_distribution(s, st);
      EXPECT_EQ(dist.total(), count_recurrence(s));
      for (int k = 1; k <= n; ++k) {
        const auto it = dist.counts.find(k);
        const BigInt got = it == dist.counts.end() ? BigInt(0) : it->second;
        EXPECT_EQ(got, BigInt(oracle::binom(n, k) * oracle::binom(n, k - 1) / n))
            << to_string(st) << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Narayana, StatisticsCoincide) {
  for (const auto& s : compositions_up_to(7)) {
    const auto base = narayana_distribution(s, NarayanaStatistic::peaks);
    EXPECT_EQ(base.total(), count_recurrence(s));
    for (auto st : all_narayana_statistics) {
      if (!narayana_statistic_applies(st, s)) {
        EXPECT_THROW(narayana_distribution(s, st), std::invalid_argument);
        continue;
      }
      EXPECT_EQ(narayana_distribution(s, st).counts, base.counts)
          << to_string(st) << " " << to_string(s);
    }
  }
}

TEST(Narayana, Names) {
  for (auto st : all_narayana_statistics)
    EXPECT_EQ(parse_narayana_statistic(to_string(st)), st);
  EXPECT_THROW(parse_narayana_statistic("bounce"), std::invalid_argument);
}
