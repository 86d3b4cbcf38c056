#pragma once

// Independent brute-force oracles. None of these reuse the library's
// generators; they work from definitions on raw sequences.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

/// Every preorder degree sequence whose nonzero entries read s in order:
/// interleave s with the right number of zeros and keep the valid ones.
inline std::set<std::vector<int>> trees(const std::vector<int>& s) {
  const int a = static_cast<int>(s.size());
  const int leaves = std::accumulate(s.begin(), s.end(), 0) - a + 1;
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int used_s, int used_z) {
    if (used_s == a && used_z == leaves) {
      long open = 1;
      bool ok = true;
      for (int d : cur) {
        if (open <= 0) ok = false;
        open += d - 1;
      }
      if (ok && open == 0) out.insert(cur);
      return;
    }
    if (used_s < a) {
      cur.push_back(s[static_cast<std::size_t>(used_s)]);
      rec(used_s + 1, used_z);
      cur.pop_back();
    }
    if (used_z < leaves) {
      cur.push_back(0);
      rec(used_s, used_z + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

/// Lattice paths from (0,0) to (b,a) that start with N, end with E, and
/// never go strictly below y = (a/b) x.
inline std::set<std::vector<int>> rational_paths_mu(long a, long b) {
  std::set<std::vector<int>> out;
  std::string w;
  std::function<void(long, long)> rec = [&](long x, long y) {
    if (a * x > b * y) return;
    if (x == b && y == a) {
      if (w.back() != 'E') return;
      std::vector<int> mu;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == 'N') mu.push_back(0);
        else mu.back()++;
      }
      out.insert(mu);
      return;
    }
    if (y < a) { w.push_back('N'); rec(x, y + 1); w.pop_back(); }
    if (x < b && !w.empty()) { w.push_back('E'); rec(x + 1, y); w.pop_back(); }
  };
  rec(0, 0);
  return out;
}

/// Partitions nu with nu_i <= lambda_i (same length, zeros allowed).
inline long fitting_partitions(const std::vector<int>& lambda) {
  long n = 0;
  std::vector<int> nu(lambda.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
    if (i == lambda.size()) { ++n; return; }
    for (int v = 0; v <= std::min(cap, lambda[i]); ++v) {
      nu[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, lambda.empty() ? 0 : lambda[0]);
  return n;
}

/// 212 avoidance: between two copies of a letter nothing smaller appears.
inline bool avoids_212(const std::vector<int>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] == w[j])
        for (std::size_t k = i + 1; k < j; ++k)
          if (w[k] < w[i]) return false;
  return true;
}

inline bool contains_312(const std::vector<int>& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (w[j] < w[k] && w[k] < w[i]) return true;
  return false;
}

/// Quadruple check straight from the definition.
inline bool noncrossing(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> owner;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) {
      if (owner.size() <= static_cast<std::size_t>(x)) owner.resize(x + 1, -1);
      owner[x] = static_cast<int>(b);
    }
  const int n = static_cast<int>(owner.size()) - 1;
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      for (int z = y + 1; z <= n; ++z)
        for (int w = z + 1; w <= n; ++w)
          if (owner[x] == owner[z] && owner[y] == owner[w] && owner[x] != owner[y])
            return false;
  return true;
}

/// Counts vectors in [0, top]^a whose sorted form obeys q_i <= mu_1+...+mu_{i-1}.
inline long parking_count(const std::vector<int>& mu) {
  const std::size_t a = mu.size();
  const int top = a ? std::accumulate(mu.begin(), mu.end() - 1, 0) : 0;
  long n = 0;
  std::vector<int> p(a, 0);
  while (true) {
    std::vector<int> q = p;
    std::sort(q.begin(), q.end());
    bool ok = true;
    int bound = 0;
    for (std::size_t i = 0; i < a && ok; ++i) {
      ok = q[i] <= bound;
      bound += mu[i];
    }
    n += ok;
    std::size_t i = 0;
    while (i < a && p[i] == top) p[i++] = 0;
    if (i == a) break;
    ++p[i];
  }
  return n;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::uint64_t binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::uint64_t catalan(unsigned n) { return binom(2 * n, n) / (n + 1); }

inline unsigned gcd(unsigned a, unsigned b) { return std::gcd(a, b); }

}  // namespace oracle
