#pragma once

// Set partitions of [n] kept in minimal order, the noncrossing predicate,
// noncrossing s-partitions and complete noncrossing s-matchings.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scat/signatures.hpp"

namespace scat {

/// Partition of {1..n}; blocks sorted internally and ordered by minimum.
class SetPartition {
public:
  SetPartition() = default;
  SetPartition(std::initializer_list<std::vector<int>> blocks)
      : SetPartition(std::vector<std::vector<int>>(blocks)) {}
  explicit SetPartition(std::vector<std::vector<int>> blocks)
      : blocks_(std::move(blocks)) {
    std::size_t n = 0;
    for (auto& b : blocks_) {
      if (b.empty()) throw std::invalid_argument("blocks must be nonempty");
      std::sort(b.begin(), b.end());
      n += b.size();
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    std::vector<bool> seen(n + 1, false);
    for (const auto& b : blocks_)
      for (int x : b) {
        if (x < 1 || static_cast<std::size_t>(x) > n || seen[x])
          throw std::invalid_argument("blocks must partition {1..n}");
        seen[x] = true;
      }
    n_ = n;
  }

  const std::vector<std::vector<int>>& blocks() const noexcept {
    return blocks_;
  }
  std::size_t ground_size() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  /// Block index (0-based, minimal order) of every element; entry 0 unused.
  std::vector<std::size_t> block_of() const {
    std::vector<std::size_t> out(n_ + 1, 0);
    for (std::size_t j = 0; j < blocks_.size(); ++j)
      for (int x : blocks_[j]) out[static_cast<std::size_t>(x)] = j;
    return out;
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
  std::vector<std::vector<int>> blocks_;
  std::size_t n_ = 0;
};

/// mu(pi): block sizes in minimal order.
inline Composition mu_of(const SetPartition& pi) {
  std::vector<int> out;
  for (const auto& b : pi.blocks()) out.push_back(static_cast<int>(b.size()));
  return Composition(std::move(out));
}

/// No x < y < z < w with x, z in one block and y, w in another. Checked in a
/// single left-to-right sweep: an element must belong to the block on top of
/// the stack of blocks that are still open.
inline bool is_noncrossing(const SetPartition& pi) {
  const auto owner = pi.block_of();
  std::vector<int> last(pi.block_count(), 0);
  for (std::size_t j = 0; j < pi.block_count(); ++j)
    last[j] = pi.blocks()[j].back();
  std::vector<std::size_t> open;
  for (std::size_t x = 1; x <= pi.ground_size(); ++x) {
    const std::size_t b = owner[x];
    const bool first = pi.blocks()[b].front() == static_cast<int>(x);
    if (first) {
      open.push_back(b);
    } else if (open.empty() || open.back() != b) {
      return false;
    }
    if (last[b] == static_cast<int>(x)) open.pop_back();
  }
  return true;
}

/// Two blocks of a noncrossing partition are either separated (one ends
/// before the other starts) or one sits inside a single gap of the other.
inline bool nested_or_separated(const std::vector<int>& b,
                                const std::vector<int>& c) {
  if (b.back() < c.front() || c.back() < b.front()) return true;
  auto inside_gap = [](const std::vector<int>& outer,
                       const std::vector<int>& inner) {
    const auto it =
        std::upper_bound(outer.begin(), outer.end(), inner.front());
    if (it == outer.begin() || it == outer.end()) return false;
    return inner.back() < *it;
  };
  return inside_gap(b, c) || inside_gap(c, b);
}

inline bool all_blocks_nested_or_separated(const SetPartition& pi) {
  const auto& bl = pi.blocks();
  for (std::size_t i = 0; i < bl.size(); ++i)
    for (std::size_t j = i + 1; j < bl.size(); ++j)
      if (!nested_or_separated(bl[i], bl[j])) return false;
  return true;
}

/// Noncrossing and s refines mu(pi).
inline bool is_s_partition(const SetPartition& pi, const Composition& s) {
  return is_noncrossing(pi) && refines(s, mu_of(pi));
}

inline bool is_complete_matching(const SetPartition& m, const Composition& s) {
  return m.ground_size() == static_cast<std::size_t>(s.sum()) &&
         mu_of(m) == s && is_noncrossing(m);
}

/// A complete noncrossing s-matching.
class Matching {
public:
  Matching() = default;
  Matching(SetPartition blocks, Composition s)
      : blocks_(std::move(blocks)), s_(std::move(s)) {
    if (!is_complete_matching(blocks_, s_))
      throw std::invalid_argument("not a complete noncrossing s-matching");
  }
  /// Signature read off the block sizes.
  explicit Matching(SetPartition blocks)
      : Matching(blocks, mu_of(blocks)) {}

  const SetPartition& partition() const noexcept { return blocks_; }
  const Composition& signature() const noexcept { return s_; }

  friend bool operator==(const Matching&, const Matching&) = default;

private:
  SetPartition blocks_;
  Composition s_;
};

/// Every set partition of [n], in lexicographic order of restricted growth
/// strings.
inline void for_each_set_partition(
    std::size_t n, const std::function<void(const SetPartition&)>& fn) {
  std::vector<int> rgs(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int maxb) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(maxb) + 1);
      for (std::size_t x = 0; x < n; ++x)
        blocks[static_cast<std::size_t>(rgs[x])].push_back(
            static_cast<int>(x + 1));
      if (n == 0) blocks.clear();
      fn(SetPartition(std::move(blocks)));
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  if (n == 0) {
    fn(SetPartition{});
    return;
  }
  rgs[0] = 0;
  rec(1, 0);
}

/// NC_c by brute force: noncrossing partitions of [|c|] refined by c.
inline std::vector<SetPartition> enumerate_noncrossing_partitions(
    const Composition& c, std::size_t cap = default_enumeration_cap) {
  std::vector<SetPartition> out;
  for_each_set_partition(static_cast<std::size_t>(c.sum()),
                         [&](const SetPartition& pi) {
                           if (!is_s_partition(pi, c)) return;
                           if (out.size() >= cap) throw cap_exceeded(cap);
                           out.push_back(pi);
                         });
  return out;
}

/// CM_s by brute force.
inline std::vector<Matching> enumerate_matchings(
    const Composition& s, std::size_t cap = default_enumeration_cap) {
  std::vector<Matching> out;
  for_each_set_partition(static_cast<std::size_t>(s.sum()),
                         [&](const SetPartition& pi) {
                           if (!is_complete_matching(pi, s)) return;
                           if (out.size() >= cap) throw cap_exceeded(cap);
                           out.emplace_back(pi, s);
                         });
  return out;
}

// text form "1,2,6,7,8|3,4,5|9,10,11,12,13"
inline std::string to_string(const SetPartition& pi) {
  std::string out;
  for (std::size_t j = 0; j < pi.block_count(); ++j) {
    if (j) out += '|';
    out += join_ints(pi.blocks()[j]);
  }
  return out;
}
inline std::string to_string(const Matching& m) {
  return to_string(m.partition());
}

inline SetPartition parse_set_partition(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::size_t start = 0;
  std::string t(text);
  std::erase(t, ' ');
  if (t.empty()) return SetPartition{};
  while (true) {
    const auto bar = t.find('|', start);
    blocks.push_back(parse_int_list(t.substr(start, bar - start)));
    if (blocks.back().empty()) throw std::invalid_argument("empty block");
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return SetPartition(std::move(blocks));
}

}  // namespace scat
