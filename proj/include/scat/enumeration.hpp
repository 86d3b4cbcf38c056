#pragma once

// Exact counts: the root-arity recurrence, the Kreweras determinant and the
// Narayana refinements.

#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "scat/bijections.hpp"
#include "scat/signatures.hpp"
#include "scat/stirling.hpp"

namespace scat {

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

/// C_s = sum over s = (s(1)) + s_1 + ... + s_{s(1)} of the product of the
/// C_{s_j}. Every subproblem is a contiguous factor of s, so the memo is
/// keyed by (offset, length).
inline BigInt count_recurrence(const Composition& s) {
  const std::size_t a = s.length();
  std::map<std::pair<std::size_t, std::size_t>, BigInt> memo;
  std::function<BigInt(std::size_t, std::size_t)> count =
      [&](std::size_t off, std::size_t len) -> BigInt {
    if (len == 0) return 1;
    const auto key = std::make_pair(off, len);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int k = s[off];
    const std::size_t lo = off + 1;
    const std::size_t end = off + len;
    // ways[p]: splittings of [p, end) into the pieces still to be placed
    std::vector<BigInt> ways(end - lo + 1, 0);
    ways[end - lo] = 1;
    for (int j = 0; j < k; ++j) {
      std::vector<BigInt> next(end - lo + 1, 0);
      for (std::size_t p = lo; p <= end; ++p)
        for (std::size_t q = p; q <= end; ++q)
          if (ways[q - lo] != 0) next[p - lo] += count(p, q - p) * ways[q - lo];
      ways = std::move(next);
    }
    memo.emplace(key, ways[0]);
    return ways[0];
  };
  return count(0, a);
}

/// Concurrent memo of C_s: lookups share the lock, insertions take it alone.
class CountCache {
public:
  BigInt get(const Composition& s) {
    if (s.empty()) return 1;
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(s); it != values_.end()) return it->second;
    }
    BigInt v = count_recurrence(s);
    std::unique_lock lock(mutex_);
    return values_.emplace(s, std::move(v)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Composition, BigInt> values_;
};

/// Fraction-free Gaussian elimination; exact for integer matrices.
inline BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Partitions fitting inside lambda: det of binom(lambda_j + 1, j - i + 1).
inline BigInt kreweras_fitting_count(const Partition& lambda) {
  const std::size_t n = lambda.length();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = binomial(lambda[j] + 1, static_cast<long>(j) - static_cast<long>(i) + 1);
  return determinant(std::move(m));
}

inline BigInt count_determinant(const Composition& s) {
  if (s.empty()) return 1;
  return kreweras_fitting_count(lambda_of(s));
}

/// binom(a+b, a) / (a+b).
inline BigInt rational_catalan(long a, long b) {
  return binomial(a + b, a) / (a + b);
}

/// N(n,k) = binom(n,k) binom(n,k-1) / n.
inline BigInt classical_narayana(long n, long k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("classical_narayana needs 1 <= k <= n");
  return binomial(n, k) * binomial(n, k - 1) / n;
}

enum class NarayanaStatistic {
  peaks,
  leftmost_leaves,
  ascents_plus_one,
  partition_blocks,
  matching_min_plus_one,
};

inline constexpr NarayanaStatistic all_narayana_statistics[] = {
    NarayanaStatistic::peaks, NarayanaStatistic::leftmost_leaves,
    NarayanaStatistic::ascents_plus_one, NarayanaStatistic::partition_blocks,
    NarayanaStatistic::matching_min_plus_one};

inline std::string to_string(NarayanaStatistic st) {
  switch (st) {
    case NarayanaStatistic::peaks: return "peaks";
    case NarayanaStatistic::leftmost_leaves: return "leftmost-leaves";
    case NarayanaStatistic::ascents_plus_one: return "ascents+1";
    case NarayanaStatistic::partition_blocks: return "partition-blocks";
    case NarayanaStatistic::matching_min_plus_one: return "matching-min-plus-one";
  }
  return "?";
}

inline NarayanaStatistic parse_narayana_statistic(std::string_view name) {
  for (auto st : all_narayana_statistics)
    if (to_string(st) == name) return st;
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

/// Whether the statistic is defined on every tree of signature s.
inline bool narayana_statistic_applies(NarayanaStatistic st,
                                       const Composition& s) {
  switch (st) {
    case NarayanaStatistic::peaks:
    case NarayanaStatistic::leftmost_leaves: return true;
    default: return s.all_at_least(2);
  }
}

inline int narayana_value(NarayanaStatistic st, const PlanarTree& t) {
  switch (st) {
    case NarayanaStatistic::peaks: return peaks(tree_to_path(t));
    case NarayanaStatistic::leftmost_leaves: return leftmost_leaf_count(t);
    case NarayanaStatistic::ascents_plus_one:
      // the empty word of the identity tree has no runs to count
      return t.is_identity() ? 0 : ascents(tree_to_stirling(t)) + 1;
    case NarayanaStatistic::partition_blocks:
      return static_cast<int>(tree_to_partition(t).block_count());
    case NarayanaStatistic::matching_min_plus_one:
      return matching_min_plus_one_blocks(tree_to_matching(t));
  }
  return 0;
}

struct NarayanaDistribution {
  NarayanaStatistic statistic;
  std::map<int, BigInt> counts;

  BigInt total() const {
    BigInt t = 0;
    for (const auto& [k, v] : counts) t += v;
    return t;
  }
};

inline NarayanaDistribution narayana_distribution(
    const Composition& s, NarayanaStatistic st,
    std::size_t cap = default_enumeration_cap) {
  if (!narayana_statistic_applies(st, s))
    throw std::invalid_argument("statistic " + to_string(st) +
                                " needs every signature entry >= 2");
  NarayanaDistribution out{st, {}};
  for_each_tree(
      s, [&](const PlanarTree& t) { out.counts[narayana_value(st, t)] += 1; },
      cap);
  return out;
}

}  // namespace scat
