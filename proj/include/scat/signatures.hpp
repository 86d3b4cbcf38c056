#pragma once

// Compositions, weak compositions and the two partial orders (refinement and
// dominance) that every signature-indexed family is built on.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scat {

/// Raised when an enumeration would produce more objects than the caller
/// allows. This is a refusal to do the work, not a statement about the set.
class cap_exceeded : public std::runtime_error {
public:
  explicit cap_exceeded(std::size_t cap)
      : std::runtime_error("enumeration cap of " + std::to_string(cap) +
                           " objects exceeded"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/// Finite sequence of nonnegative integers.
class WeakComposition {
public:
  WeakComposition() = default;
  WeakComposition(std::initializer_list<int> parts)
      : WeakComposition(std::vector<int>(parts)) {}
  explicit WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0)
        throw std::invalid_argument("weak composition parts must be >= 0");
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  long sum() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
  }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const WeakComposition&,
                         const WeakComposition&) = default;
  friend auto operator<=>(const WeakComposition&,
                          const WeakComposition&) = default;

private:
  std::vector<int> parts_;
};

/// Finite sequence of positive integers. Signatures are compositions.
class Composition {
public:
  Composition() = default;
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  long sum() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
  }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  /// |s| - l(s): the number of caverns of an s-tree.
  long excess() const noexcept { return sum() - static_cast<long>(length()); }
  bool all_at_least(int k) const noexcept {
    return std::all_of(parts_.begin(), parts_.end(),
                       [k](int p) { return p >= k; });
  }

  operator WeakComposition() const { return WeakComposition(parts_); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
};

/// Nonincreasing sequence. Zero parts are admitted because lambda_of(s)
/// produces them whenever s starts with entries equal to 1.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0)
        throw std::invalid_argument("partition parts must be >= 0");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be nonincreasing");
    }
  }
  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

// ---------------------------------------------------------------------------
// orders and operations

/// True iff nu is obtained from mu by summing contiguous blocks.
inline bool refines(const Composition& mu, const Composition& nu) {
  if (mu.sum() != nu.sum()) return false;
  std::size_t i = 0;
  for (int target : nu) {
    long acc = 0;
    while (i < mu.length() && acc < target) acc += mu[i++];
    if (acc != target) return false;
  }
  return i == mu.length();
}

inline std::vector<long> prefix_sums(const WeakComposition& mu,
                                     std::size_t length) {
  std::vector<long> out(length, 0);
  long acc = 0;
  for (std::size_t i = 0; i < length; ++i) {
    if (i < mu.length()) acc += mu[i];
    out[i] = acc;
  }
  return out;
}

/// Prefix-sum dominance; the shorter argument is padded with zeros.
inline bool dominance_leq(const WeakComposition& mu,
                          const WeakComposition& nu) {
  const std::size_t n = std::max(mu.length(), nu.length());
  const auto pm = prefix_sums(mu, n);
  const auto pn = prefix_sums(nu, n);
  for (std::size_t i = 0; i < n; ++i)
    if (pm[i] > pn[i]) return false;
  return true;
}

/// nu \_dom mu: length l(nu)-1, entry i is prefix_i(nu) - prefix_i(mu).
inline WeakComposition dominance_diff(const WeakComposition& nu,
                                      const WeakComposition& mu) {
  if (nu.sum() != mu.sum())
    throw std::invalid_argument("dominance difference needs equal sums");
  if (!dominance_leq(mu, nu))
    throw std::invalid_argument("dominance difference needs mu <=_dom nu");
  if (nu.empty()) return {};
  const std::size_t n = std::max(mu.length(), nu.length());
  const auto pm = prefix_sums(mu, n);
  const auto pn = prefix_sums(nu, n);
  std::vector<int> out;
  out.reserve(nu.length() - 1);
  for (std::size_t i = 0; i + 1 < nu.length(); ++i)
    out.push_back(static_cast<int>(pn[i] - pm[i]));
  return WeakComposition(std::move(out));
}

inline WeakComposition concat(const WeakComposition& mu,
                              const WeakComposition& nu) {
  std::vector<int> out(mu.begin(), mu.end());
  out.insert(out.end(), nu.begin(), nu.end());
  return WeakComposition(std::move(out));
}

inline Composition concat(const Composition& mu, const Composition& nu) {
  std::vector<int> out(mu.begin(), mu.end());
  out.insert(out.end(), nu.begin(), nu.end());
  return Composition(std::move(out));
}

/// s - 1, taken entrywise.
inline WeakComposition minus_one(const Composition& s) {
  std::vector<int> out;
  out.reserve(s.length());
  for (int p : s) out.push_back(p - 1);
  return WeakComposition(std::move(out));
}

/// c + 1, taken entrywise.
inline Composition plus_one(const WeakComposition& c) {
  std::vector<int> out;
  out.reserve(c.length());
  for (int p : c) out.push_back(p + 1);
  return Composition(std::move(out));
}

/// Contiguous factor [offset, offset+length) of s.
inline Composition slice(const Composition& s, std::size_t offset,
                         std::size_t length) {
  return Composition(std::vector<int>(s.begin() + offset,
                                      s.begin() + offset + length));
}

/// Signature of the ribbon cut out of the b x a grid by its diagonal.
inline Composition rational_signature(long a, long b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("rational signature needs a, b >= 1");
  if (std::gcd(a, b) != 1)
    throw std::invalid_argument("rational signature needs gcd(a, b) = 1");
  const long ceil_ba = (b + a - 1) / a;
  const long r = b - (b / a) * a;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(a));
  for (long i = 1; i <= a; ++i) {
    const long m = (i * r) % a;
    out.push_back(static_cast<int>(ceil_ba + ((0 < m && m < r) ? 1 : 0)));
  }
  return Composition(std::move(out));
}

/// lambda^s_j = sum_{i <= a-j} (s_i - 1), j = 1..a-1.
inline Partition lambda_of(const Composition& s) {
  if (s.empty()) throw std::invalid_argument("lambda_of needs l(s) >= 1");
  const std::size_t a = s.length();
  std::vector<int> out;
  out.reserve(a - 1);
  for (std::size_t j = 1; j < a; ++j) {
    int acc = 0;
    for (std::size_t i = 0; i < a - j; ++i) acc += s[i] - 1;
    out.push_back(acc);
  }
  return Partition(std::move(out));
}

// ---------------------------------------------------------------------------
// generation

/// Calls fn(mu) for every weak composition mu with l(mu) = l(bound),
/// |mu| = |bound| and mu <=_dom bound, in lexicographic order.
inline void for_each_dominated(
    const WeakComposition& bound,
    const std::function<void(const WeakComposition&)>& fn) {
  const std::size_t n = bound.length();
  if (n == 0) {
    fn(WeakComposition{});
    return;
  }
  const auto cap = prefix_sums(bound, n);
  const long total = cap.back();
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long acc) {
    if (i + 1 == n) {
      cur[i] = static_cast<int>(total - acc);
      fn(WeakComposition(cur));
      return;
    }
    for (long v = 0; acc + v <= cap[i]; ++v) {
      cur[i] = static_cast<int>(v);
      rec(i + 1, acc + v);
    }
  };
  rec(0, 0);
}

/// Every composition of n, in lexicographic order.
inline std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

/// Every composition with sum at most max_weight (including the empty one),
/// ordered by weight and then lexicographically.
inline std::vector<Composition> compositions_up_to(int max_weight) {
  std::vector<Composition> out;
  for (int n = 0; n <= max_weight; ++n) {
    auto part = compositions_of(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// text form: comma separated integers, empty string for the empty sequence

inline std::vector<int> parse_int_list(std::string_view text,
                                       char sep = ',') {
  std::vector<int> out;
  std::string cleaned;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '(' && c != ')') cleaned.push_back(c);
  if (cleaned.empty()) return out;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) throw std::invalid_argument("empty list entry");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    if (used != item.size())
      throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (cleaned.back() == sep) throw std::invalid_argument("empty list entry");
  return out;
}

inline std::string join_ints(const std::vector<int>& v,
                             std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

inline Composition parse_composition(std::string_view text) {
  return Composition(parse_int_list(text));
}
inline WeakComposition parse_weak_composition(std::string_view text) {
  return WeakComposition(parse_int_list(text));
}
inline std::string to_string(const WeakComposition& mu) {
  return join_ints(mu.parts());
}
inline std::string to_string(const Composition& s) {
  return join_ints(s.parts());
}
inline std::string to_string(const Partition& l) {
  return join_ints(l.parts());
}

}  // namespace scat
