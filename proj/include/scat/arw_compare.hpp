#pragma once

// The laser construction on rational (a,b)-Dyck paths and a side-by-side
// comparison with the cavern partition of the corresponding tree.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "scat/bijections.hpp"
#include "scat/noncrossing.hpp"
#include "scat/paths.hpp"
#include "scat/signatures.hpp"

namespace scat {

/// Ray y = y0 + (a/b)(x - x0) leaving the bottom of a north run. The ray
/// stops at x = stop_num / stop_den, the first point past x0 where it meets
/// the path again.
struct Laser {
  long x0 = 0;
  long y0 = 0;
  long stop_num = 0;
  long stop_den = 1;

  friend bool operator==(const Laser&, const Laser&) = default;
};

inline void require_rational_path(const DyckPath& d, long a, long b) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1)
    throw std::invalid_argument("(a,b) must be coprime positive integers");
  if (d.signature() != rational_signature(a, b))
    throw std::invalid_argument("path signature is not the (a,b) signature");
}

/// One laser per maximal north run, in left-to-right order.
inline std::vector<Laser> lasers(const DyckPath& d, long a, long b) {
  require_rational_path(d, a, b);
  const auto x = north_step_columns(d);
  const std::size_t rows = d.north_steps();
  std::vector<Laser> out;
  for (const auto& run : north_runs(d)) {
    Laser l;
    l.x0 = x[run.front()];
    l.y0 = static_cast<long>(run.front());
    // sentinel: beyond the end of the path
    l.stop_num = b + 1;
    l.stop_den = 1;
    auto consider = [&](long num, long den) {
      if (num * l.stop_den < l.stop_num * den) {
        l.stop_num = num;
        l.stop_den = den;
      }
    };
    // vertical pieces: the north step of row r spans heights r..r+1 at x[r];
    // scaled by b the laser sits at b*y0 + a*(X - x0)
    for (std::size_t r = 0; r < rows; ++r) {
      const long X = x[r];
      if (X <= l.x0) continue;
      const long h = b * l.y0 + a * (X - l.x0);
      if (b * static_cast<long>(r) <= h && h <= b * static_cast<long>(r + 1))
        consider(X, 1);
    }
    // horizontal pieces: east steps of row r at height r+1 (the final run,
    // including the closing east step, sits at height a); the laser reaches
    // height y at x = x0 + b(y - y0)/a
    for (std::size_t r = 0; r < rows; ++r) {
      const long y = static_cast<long>(r) + 1;
      const long start = x[r];
      const long len = d.mu()[r] + (r + 1 == rows ? 1 : 0);
      if (len == 0 || y <= l.y0) continue;
      const long num = a * l.x0 + b * (y - l.y0);
      if (num <= a * l.x0) continue;
      if (a * start <= num && num <= a * (start + len)) consider(num, a);
    }
    out.push_back(l);
  }
  return out;
}

/// Labels 1..b-1 at the right ends of the east steps (the closing east step
/// carries no label). Two labels share a block exactly when the same lasers
/// pass strictly below them: a laser counts at label (x, y) when
/// x0 < x <= stop and its height at x is below y.
inline SetPartition laser_partition(const DyckPath& d, long a, long b) {
  const auto ls = lasers(d, a, b);
  const auto x = north_step_columns(d);
  std::map<std::vector<std::size_t>, std::vector<int>> groups;
  std::vector<std::vector<std::size_t>> order;
  int label = 0;
  for (std::size_t r = 0; r < d.north_steps(); ++r) {
    const long y = static_cast<long>(r) + 1;
    for (int e = 1; e <= d.mu()[r]; ++e) {
      ++label;
      const long px = x[r] + e;
      std::vector<std::size_t> below;
      for (std::size_t k = 0; k < ls.size(); ++k) {
        const auto& l = ls[k];
        if (px <= l.x0 || px * l.stop_den > l.stop_num) continue;
        if (b * l.y0 + a * (px - l.x0) < b * y) below.push_back(k);
      }
      auto [it, fresh] = groups.try_emplace(below);
      if (fresh) order.push_back(below);
      it->second.push_back(label);
    }
  }
  std::vector<std::vector<int>> blocks;
  for (const auto& key : order) blocks.push_back(groups[key]);
  return SetPartition(std::move(blocks));
}

struct ArwComparison {
  SetPartition arw;
  /// Cavern partition of the tree; absent when some s(i) = 1.
  std::optional<SetPartition> ours;
  bool equal = false;
};

inline ArwComparison compare_constructions(long a, long b, const DyckPath& d) {
  ArwComparison out;
  out.arw = laser_partition(d, a, b);
  if (d.signature().all_at_least(2)) {
    out.ours = tree_to_partition(path_to_tree(d));
    out.equal = *out.ours == out.arw;
  }
  return out;
}

}  // namespace scat
