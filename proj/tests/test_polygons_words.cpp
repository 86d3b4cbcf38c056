#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "scat/polygons_words.hpp"

using namespace scat;

TEST(Angulation, Validation) {
  EXPECT_THROW(Angulation(6, {{1, 2}}), std::invalid_argument);
  EXPECT_THROW(Angulation(6, {{1, 6}}), std::invalid_argument);
  EXPECT_THROW(Angulation(6, {{1, 4}, {2, 5}}), std::invalid_argument);
  EXPECT_THROW(Angulation(6, {{1, 7}}), std::invalid_argument);
  EXPECT_NO_THROW(Angulation(6, {{1, 4}, {4, 6}}));
}

TEST(Angulation, RunningExampleSignature) {
  const auto a = parse_angulation("n=15; 1-10,2-9,4-8,10-15");
  EXPECT_EQ(signature_of_angulation(a), Composition({3, 4, 4, 2, 5}));
  EXPECT_EQ(to_string(a), "n=15; 1-10,2-9,4-8,10-15");
}

TEST(Angulation, FaceSizesFollowEuler) {
  for (int n = 3; n <= 9; ++n)
    for_each_angulation(n, [&](const Angulation& a) {
      const auto fs = faces(a);
      const auto s = signature_of_angulation(a);
      EXPECT_EQ(fs.size(), a.diagonals().size() + 1);
      EXPECT_EQ(s.length(), fs.size());
      long sides = 0;
      std::vector<int> from_faces, from_sig(s.begin(), s.end());
      for (const auto& f : fs) {
        sides += static_cast<long>(f.size());
        from_faces.push_back(static_cast<int>(f.size()) - 1);
      }
      EXPECT_EQ(sides, n + 2 * static_cast<long>(a.diagonals().size()));
      std::sort(from_faces.begin(), from_faces.end());
      std::sort(from_sig.begin(), from_sig.end());
      EXPECT_EQ(from_faces, from_sig);
      EXPECT_EQ(s.excess() + 2, n);
    });
}

TEST(Angulation, CountsAreCatalan) {
  for (const auto& s : compositions_up_to(9)) {
    if (s.empty() || !s.all_at_least(2)) continue;
    EXPECT_EQ(enumerate_angulations_brute(s).size(),
              oracle::trees(s.parts()).size()) << to_string(s);
  }
}

TEST(Angulation, TriangulationsOfHexagon) {
  std::size_t tri = 0;
  for_each_angulation(6, [&](const Angulation& a) { tri += a.diagonals().size() == 3; });
  EXPECT_EQ(tri, 14u);
}

TEST(Parenthesization, Validity) {
  EXPECT_TRUE(is_valid_parenthesization("(**(****)*)*((*****)*)"));
  EXPECT_TRUE(is_valid_parenthesization("*"));
  EXPECT_FALSE(is_valid_parenthesization("()*"));
  EXPECT_FALSE(is_valid_parenthesization(")*("));
  EXPECT_FALSE(is_valid_parenthesization("(**"));
  EXPECT_FALSE(is_valid_parenthesization(""));
  EXPECT_FALSE(is_valid_parenthesization("*x"));
}

TEST(Parenthesization, RunningExample) {
  const std::string w = "(**(****)*)*((*****)*)";
  EXPECT_EQ(signature_of_parenthesization(w), Composition({3, 4, 4, 2, 5}));
  EXPECT_EQ(parenthesization_of(parenthesization_tree(w)), w);
  // the redundant outer pair reads the same
  EXPECT_EQ(parenthesization_tree("(" + w + ")"), parenthesization_tree(w));
}

TEST(Parenthesization, BlockFactorization) {
  const std::string w = "(**(****)*)*((*****)*)";
  const auto blocks = block_factorization(w);
  EXPECT_EQ(blocks, std::vector<std::string>({"(**(****)*)", "*", "((*****)*)"}));
  std::string joined;
  for (const auto& b : blocks) {
    joined += b;
    if (b == "*") continue;
    long depth = 0;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      depth += (b[i] == '(') - (b[i] == ')');
      EXPECT_GT(depth, 0);
    }
  }
  EXPECT_EQ(joined, w);
}

TEST(Parenthesization, LetterLawsAndRoundTrip) {
  for (const auto& s : compositions_up_to(8))
    for (const auto& t : enumerate_trees(s)) {
      const auto w = parenthesization_of(t);
      ASSERT_TRUE(is_valid_parenthesization(w)) << w;
      const long stars = std::count(w.begin(), w.end(), '*');
      const long pairs = std::count(w.begin(), w.end(), '(');
      EXPECT_EQ(stars, s.excess() + 1);
      const long omitted = !s.empty() && s[0] >= 2 ? 1 : 0;
      EXPECT_EQ(pairs, static_cast<long>(s.length()) - omitted) << w;
      EXPECT_EQ(parenthesization_tree(w), t);
    }
}

TEST(Parenthesization, WordCountsMatchByBruteForce) {
  for (const auto& s : compositions_up_to(6)) {
    if (s.empty() || s[0] < 2) continue;
    const long stars = s.excess() + 1;
    const long pairs = static_cast<long>(s.length()) - 1;
    std::string w(static_cast<std::size_t>(stars + 2 * pairs), '*');
    std::set<std::string> words;
    std::function<void(std::size_t, long, long, long)> rec =
        [&](std::size_t i, long st, long op, long cl) {
          if (i == w.size()) {
            if (is_valid_parenthesization(w) && signature_of_parenthesization(w) == s)
              words.insert(w);
            return;
          }
          if (st < stars) { w[i] = '*'; rec(i + 1, st + 1, op, cl); }
          if (op < pairs) { w[i] = '('; rec(i + 1, st, op + 1, cl); }
          if (cl < op) { w[i] = ')'; rec(i + 1, st, op, cl + 1); }
        };
    rec(0, 0, 0, 0);
    EXPECT_EQ(words.size(), oracle::trees(s.parts()).size()) << to_string(s);
  }
}
