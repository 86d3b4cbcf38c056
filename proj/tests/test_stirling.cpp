#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "scat/stirling.hpp"

using namespace scat;

namespace {

std::uint64_t s_factorial_oracle(const std::vector<int>& s) {
  std::uint64_t out = 1, acc = 0;
  for (int x : s) {
    out *= acc + 1;
    acc += static_cast<std::uint64_t>(x);
  }
  return out;
}

}  // namespace

TEST(Multipermutation, ContentAndValidation) {
  const Multipermutation m({2, 2, 3, 3, 3, 2, 1, 1, 5, 5, 5, 5, 4});
  EXPECT_EQ(m.content(), Composition({2, 3, 3, 1, 4}));
  EXPECT_THROW(Multipermutation({1, 3}), std::invalid_argument);
  EXPECT_THROW(Multipermutation({0, 1}), std::invalid_argument);
}

TEST(Patterns, AgreeWithDirectChecks) {
  for (const auto& c : compositions_up_to(6))
    for_each_multipermutation(c, [&](const Multipermutation& m) {
      EXPECT_EQ(is_stirling(m), oracle::avoids_212(m.word())) << to_string(m);
      EXPECT_EQ(contains_pattern(m, pattern_312), oracle::contains_312(m.word()))
          << to_string(m);
    });
}

TEST(Patterns, RepeatedLettersInPattern) {
  const int p121[] = {1, 2, 1};
  EXPECT_TRUE(contains_pattern(Multipermutation({1, 3, 2, 1}), p121));
  EXPECT_FALSE(contains_pattern(Multipermutation({1, 1, 2, 2}), p121));
}

TEST(SFactorial, FormulaAndDoubleFactorial) {
  EXPECT_EQ(s_factorial(Composition{}), 1);
  EXPECT_EQ(s_factorial(Composition({3, 4, 4, 2, 5})), 1 * 4 * 8 * 12 * 14);
  std::uint64_t dfact = 1;
  for (int n = 1; n <= 6; ++n) {
    dfact *= 2 * n - 1;
    EXPECT_EQ(s_factorial(Composition(std::vector<int>(n, 2))), dfact);
  }
}

TEST(Stirling, GenerationCountsEqualSFactorial) {
  for (const auto& s : compositions_up_to(9)) {
    const auto all = enumerate_stirling(s);
    EXPECT_EQ(all.size(), s_factorial_oracle(s.parts())) << to_string(s);
    for (const auto& m : all) EXPECT_EQ(m.content(), s);
  }
}

TEST(Stirling, ThreeOneTwoAvoidersAreCatalan) {
  for (const auto& c : compositions_up_to(7)) {
    const auto s = plus_one(c);
    const auto got = enumerate_312_avoiding_filtered(c);
    EXPECT_EQ(got.size(), oracle::trees(s.parts()).size()) << to_string(c);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(Stirling, RunningExampleWordAvoidsBoth) {
  const auto m = parse_multipermutation("2233321155554");
  EXPECT_TRUE(is_312_avoiding_stirling(m));
  EXPECT_EQ(ascents(m), 2);
}

TEST(Stirling, ReverseComplementIsBijectionOntoMirrorClass) {
  const int p121[] = {1, 2, 1};
  const int p231[] = {2, 3, 1};
  for (const auto& c : compositions_up_to(7)) {
    std::vector<int> rev(c.parts().rbegin(), c.parts().rend());
    const Composition rc(rev);
    std::set<Multipermutation> image;
    for (const auto& m : enumerate_312_avoiding_filtered(c)) {
      const auto r = reverse_complement(m);
      EXPECT_EQ(r.content(), rc);
      EXPECT_FALSE(contains_pattern(r, p121));
      EXPECT_FALSE(contains_pattern(r, p231));
      image.insert(r);
    }
    std::size_t target = 0;
    for_each_multipermutation(rc, [&](const Multipermutation& m) {
      target += !contains_pattern(m, p121) && !contains_pattern(m, p231);
    });
    EXPECT_EQ(image.size(), target) << to_string(c);
  }
}

TEST(IncreasingTrees, CountEqualsShiftedSFactorial) {
  // node i has s(i) children; the matching words have content s - 1
  for (const auto& s : compositions_up_to(7)) {
    const auto trees = enumerate_increasing_trees(s);
    EXPECT_EQ(trees.size(), s_factorial_oracle(minus_one(s).parts())) << to_string(s);
    for (const auto& t : trees) EXPECT_EQ(t.label_signature(), s);
  }
}

TEST(IncreasingTrees, RejectsDecreasingLabels) {
  const PlanarTree t{2, 1, 0, 0};
  EXPECT_NO_THROW(IncreasingTree(t, {1, 2}));
  EXPECT_THROW(IncreasingTree(t, {2, 1}), std::invalid_argument);
}

TEST(Text, RoundTrip) {
  const Multipermutation m({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 10});
  EXPECT_EQ(to_string(m), "1,2,3,4,5,6,7,8,9,10,10");
  EXPECT_EQ(parse_multipermutation(to_string(m)), m);
  EXPECT_THROW(parse_multipermutation("1,3"), std::invalid_argument);
  EXPECT_EQ(parse_multipermutation("2233321155554").size(), 13u);
  EXPECT_THROW(parse_multipermutation("12a"), std::invalid_argument);
}
