#pragma once

// Multipermutations, pattern containment, Stirling permutations and the
// s-factorial.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "scat/signatures.hpp"
#include "scat/trees.hpp"

namespace scat {

using BigInt = boost::multiprecision::cpp_int;

/// A word using every letter 1..a; content(i) is the multiplicity of i.
class Multipermutation {
public:
  Multipermutation() = default;
  explicit Multipermutation(std::vector<int> word) : word_(std::move(word)) {
    int a = 0;
    for (int x : word_) {
      if (x < 1) throw std::invalid_argument("letters must be >= 1");
      a = std::max(a, x);
    }
    std::vector<int> mult(static_cast<std::size_t>(a), 0);
    for (int x : word_) ++mult[static_cast<std::size_t>(x - 1)];
    for (int m : mult)
      if (m == 0)
        throw std::invalid_argument("letters must form an interval 1..a");
    content_ = Composition(std::move(mult));
  }

  const std::vector<int>& word() const noexcept { return word_; }
  const Composition& content() const noexcept { return content_; }
  std::size_t size() const noexcept { return word_.size(); }
  int operator[](std::size_t i) const { return word_[i]; }

  friend bool operator==(const Multipermutation& x,
                         const Multipermutation& y) {
    return x.word_ == y.word_;
  }
  friend auto operator<=>(const Multipermutation& x,
                          const Multipermutation& y) {
    return x.word_ <=> y.word_;
  }

private:
  std::vector<int> word_;
  Composition content_;
};

/// True iff some subsequence of sigma is order-isomorphic to tau (equal
/// letters of tau must match equal letters).
inline bool contains_pattern(std::span<const int> sigma,
                             std::span<const int> tau) {
  if (tau.empty()) return true;
  std::vector<int> chosen;
  chosen.reserve(tau.size());
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t from,
                                                          std::size_t t) {
    if (t == tau.size()) return true;
    for (std::size_t i = from; i + (tau.size() - t) <= sigma.size(); ++i) {
      bool ok = true;
      for (std::size_t u = 0; u < t && ok; ++u) {
        const int want = (tau[u] > tau[t]) - (tau[u] < tau[t]);
        const int got = (chosen[u] > sigma[i]) - (chosen[u] < sigma[i]);
        ok = want == got;
      }
      if (!ok) continue;
      chosen.push_back(sigma[i]);
      if (rec(i + 1, t + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0, 0);
}

inline bool contains_pattern(const Multipermutation& sigma,
                             std::span<const int> tau) {
  return contains_pattern(std::span<const int>(sigma.word()), tau);
}

inline constexpr int pattern_212[] = {2, 1, 2};
inline constexpr int pattern_312[] = {3, 1, 2};

inline bool is_stirling(const Multipermutation& sigma) {
  return !contains_pattern(sigma, pattern_212);
}

inline bool is_312_avoiding_stirling(const Multipermutation& sigma) {
  return is_stirling(sigma) && !contains_pattern(sigma, pattern_312);
}

inline int ascents(const Multipermutation& sigma) {
  int n = 0;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
    n += sigma[i] < sigma[i + 1];
  return n;
}

/// 1 * (s(1)+1) * (s(1)+s(2)+1) * ... * (s(1)+...+s(a-1)+1).
inline BigInt s_factorial(const Composition& s) {
  BigInt out = 1;
  long prefix = 0;
  for (std::size_t i = 0; i + 1 < s.length(); ++i) {
    prefix += s[i];
    out *= prefix + 1;
  }
  return out;
}

/// Every multipermutation with the given content, lexicographically.
inline void for_each_multipermutation(
    const Composition& content,
    const std::function<void(const Multipermutation&)>& fn,
    std::size_t cap = default_enumeration_cap) {
  std::vector<int> w;
  for (std::size_t i = 0; i < content.length(); ++i)
    w.insert(w.end(), static_cast<std::size_t>(content[i]),
             static_cast<int>(i + 1));
  std::size_t n = 0;
  do {
    if (++n > cap) throw cap_exceeded(cap);
    fn(Multipermutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

/// SP_s: 212-avoiding multipermutations of {1^s(1), ..., a^s(a)}.
inline std::vector<Multipermutation> enumerate_stirling(
    const Composition& s, std::size_t cap = default_enumeration_cap) {
  std::vector<Multipermutation> out;
  for_each_multipermutation(
      s,
      [&](const Multipermutation& m) {
        if (is_stirling(m)) out.push_back(m);
      },
      cap);
  return out;
}

/// SP_c(312) by filtering all multipermutations; lexicographic order. The
/// tree-driven generator in bijections.hpp lists the same set in canonical
/// order.
inline std::vector<Multipermutation> enumerate_312_avoiding_filtered(
    const Composition& content, std::size_t cap = default_enumeration_cap) {
  std::vector<Multipermutation> out;
  for_each_multipermutation(
      content,
      [&](const Multipermutation& m) {
        if (is_312_avoiding_stirling(m)) out.push_back(m);
      },
      cap);
  return out;
}

/// i -> a+1-i followed by reversal of the word.
inline Multipermutation reverse_complement(const Multipermutation& sigma) {
  const int a = static_cast<int>(sigma.content().length());
  std::vector<int> w(sigma.word().rbegin(), sigma.word().rend());
  for (int& x : w) x = a + 1 - x;
  return Multipermutation(std::move(w));
}

/// Planar tree whose internal nodes (in preorder) carry distinct labels 1..a
/// that increase away from the root.
class IncreasingTree {
public:
  IncreasingTree(PlanarTree tree, std::vector<int> labels)
      : tree_(std::move(tree)), labels_(std::move(labels)) {
    const auto internal = tree_.internal_nodes();
    if (labels_.size() != internal.size())
      throw std::invalid_argument("one label per internal node");
    std::vector<int> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i + 1))
        throw std::invalid_argument("labels must be a permutation of 1..a");
    std::vector<int> node_label(tree_.node_count(), 0);
    for (std::size_t k = 0; k < internal.size(); ++k)
      node_label[internal[k]] = labels_[k];
    const auto parent = tree_.parents();
    for (std::size_t v : internal)
      if (parent[v] != PlanarTree::npos && node_label[parent[v]] >= node_label[v])
        throw std::invalid_argument("labels must increase away from the root");
  }

  const PlanarTree& tree() const noexcept { return tree_; }
  /// labels()[k] is the label of the (k+1)-th internal node in preorder.
  const std::vector<int>& labels() const noexcept { return labels_; }

  /// s(i) = number of children of the node labeled i.
  Composition label_signature() const {
    const auto internal = tree_.internal_nodes();
    std::vector<int> s(internal.size(), 0);
    for (std::size_t k = 0; k < internal.size(); ++k)
      s[static_cast<std::size_t>(labels_[k] - 1)] = tree_.degree(internal[k]);
    return Composition(std::move(s));
  }

  friend bool operator==(const IncreasingTree&,
                         const IncreasingTree&) = default;

private:
  PlanarTree tree_;
  std::vector<int> labels_;
};

/// IT_s by brute force: every tree whose preorder signature is a
/// rearrangement of s, with every increasing labeling compatible with s.
inline std::vector<IncreasingTree> enumerate_increasing_trees(
    const Composition& s, std::size_t cap = default_enumeration_cap) {
  std::vector<IncreasingTree> out;
  std::vector<int> order(s.begin(), s.end());
  std::sort(order.begin(), order.end());
  const std::size_t a = s.length();
  do {
    for_each_tree(
        Composition(order),
        [&](const PlanarTree& t) {
          const auto internal = t.internal_nodes();
          const auto parent = t.parents();
          std::vector<std::size_t> internal_rank(t.node_count(), 0);
          for (std::size_t k = 0; k < a; ++k) internal_rank[internal[k]] = k;
          std::vector<int> labels(a);
          for (std::size_t k = 0; k < a; ++k) labels[k] = static_cast<int>(k + 1);
          do {
            bool ok = true;
            for (std::size_t k = 0; k < a && ok; ++k) {
              const std::size_t v = internal[k];
              ok = s[static_cast<std::size_t>(labels[k] - 1)] == t.degree(v);
              if (ok && parent[v] != PlanarTree::npos)
                ok = labels[internal_rank[parent[v]]] < labels[k];
            }
            if (ok) {
              if (out.size() >= cap) throw cap_exceeded(cap);
              out.emplace_back(t, labels);
            }
          } while (std::next_permutation(labels.begin(), labels.end()));
        },
        cap);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// text form: digits when every letter is <= 9, comma separated otherwise
inline std::string to_string(const Multipermutation& m) {
  const bool digits = std::all_of(m.word().begin(), m.word().end(),
                                  [](int x) { return x <= 9; });
  if (!digits) return join_ints(m.word());
  std::string out;
  for (int x : m.word()) out.push_back(static_cast<char>('0' + x));
  return out;
}

inline Multipermutation parse_multipermutation(std::string_view text) {
  if (text.find(',') != std::string_view::npos)
    return Multipermutation(parse_int_list(text));
  std::vector<int> w;
  for (char c : text) {
    if (c == ' ') continue;
    if (c < '1' || c > '9')
      throw std::invalid_argument("permutation letters must be digits 1-9");
    w.push_back(c - '0');
  }
  return Multipermutation(std::move(w));
}

}  // namespace scat
