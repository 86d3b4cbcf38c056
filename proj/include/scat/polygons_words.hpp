#pragma once

// Angulations of a convex polygon and parenthesized words over '*', both
// read through the root-removal recursion that also decomposes trees.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scat/signatures.hpp"
#include "scat/trees.hpp"

namespace scat {

// ---------------------------------------------------------------------------
// angulations

/// Vertices 1..n in clockwise order; the root edge joins 1 and 2. The
/// two-vertex polygon (a single edge) is the identity angulation.
class Angulation {
public:
  Angulation() = default;
  Angulation(int n, std::vector<std::pair<int, int>> diagonals)
      : n_(n), diagonals_(std::move(diagonals)) {
    if (n_ < 2) throw std::invalid_argument("a polygon needs >= 2 vertices");
    for (auto& [i, j] : diagonals_) {
      if (i > j) std::swap(i, j);
      if (i < 1 || j > n_)
        throw std::invalid_argument("diagonal endpoint outside the polygon");
      if (j - i < 2 || (i == 1 && j == n_))
        throw std::invalid_argument("diagonal joins adjacent vertices");
    }
    std::sort(diagonals_.begin(), diagonals_.end());
    if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) !=
        diagonals_.end())
      throw std::invalid_argument("repeated diagonal");
    for (std::size_t x = 0; x < diagonals_.size(); ++x)
      for (std::size_t y = x + 1; y < diagonals_.size(); ++y)
        if (crosses(diagonals_[x], diagonals_[y]))
          throw std::invalid_argument("crossing diagonals");
  }

  static bool crosses(std::pair<int, int> d, std::pair<int, int> e) {
    auto [a, b] = d;
    auto [c, f] = e;
    return (a < c && c < b && b < f) || (c < a && a < f && f < b);
  }

  int polygon_size() const noexcept { return n_; }
  const std::vector<std::pair<int, int>>& diagonals() const noexcept {
    return diagonals_;
  }

  friend bool operator==(const Angulation&, const Angulation&) = default;
  friend auto operator<=>(const Angulation&, const Angulation&) = default;

private:
  int n_ = 2;
  std::vector<std::pair<int, int>> diagonals_;
};

namespace detail {

// Positions run along the boundary opposite the root edge: vertex 2 is
// position 0, vertex n is position n-2 and vertex 1 is position n-1.
inline int angulation_position(int n, int v) { return v == 1 ? n - 1 : v - 2; }
inline int angulation_vertex(int n, int p) { return p == n - 1 ? 1 : p + 2; }

struct AngulationWalk {
  std::vector<int> degrees;               // preorder, one entry per side
  std::vector<std::vector<int>> faces;    // vertex labels, sorted
};

/// Reads the angulation as a tree: the face on the inner side of the edge
/// between positions lo < hi is a node whose children are the other sides of
/// that face in increasing position order; boundary edges are leaves.
inline AngulationWalk walk_angulation(const Angulation& a) {
  const int n = a.polygon_size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  auto link = [&](int p, int q) {
    adj[static_cast<std::size_t>(p)].push_back(q);
    adj[static_cast<std::size_t>(q)].push_back(p);
  };
  for (int p = 0; p + 1 < n; ++p) link(p, p + 1);
  for (auto [i, j] : a.diagonals())
    link(angulation_position(n, i), angulation_position(n, j));

  AngulationWalk out;
  std::function<void(int, int)> rec = [&](int lo, int hi) {
    if (hi == lo + 1) {
      out.degrees.push_back(0);
      return;
    }
    std::vector<int> face{lo};
    int cur = lo;
    while (cur != hi) {
      int next = -1;
      for (int q : adj[static_cast<std::size_t>(cur)])
        if (q > cur && q <= hi && !(cur == lo && q == hi)) next = std::max(next, q);
      if (next < 0) throw std::logic_error("face tracing lost the boundary");
      face.push_back(next);
      cur = next;
    }
    out.degrees.push_back(static_cast<int>(face.size() - 1));
    std::vector<int> labels;
    for (int p : face) labels.push_back(angulation_vertex(n, p));
    std::sort(labels.begin(), labels.end());
    out.faces.push_back(std::move(labels));
    for (std::size_t k = 0; k + 1 < face.size(); ++k) rec(face[k], face[k + 1]);
  };
  rec(0, n - 1);
  return out;
}

}  // namespace detail

/// Faces as sorted vertex tuples, listed in the order the root-removal
/// recursion visits them.
inline std::vector<std::vector<int>> faces(const Angulation& a) {
  return detail::walk_angulation(a).faces;
}

inline Composition signature_of_angulation(const Angulation& a) {
  return signature(PlanarTree(detail::walk_angulation(a).degrees));
}

/// Every angulation of P(n), by backtracking over the diagonals.
inline void for_each_angulation(int n,
                                const std::function<void(const Angulation&)>& fn) {
  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      if (!(i == 1 && j == n)) all.emplace_back(i, j);
  std::vector<std::pair<int, int>> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == all.size()) {
      fn(Angulation(n, chosen));
      return;
    }
    rec(k + 1);
    for (const auto& d : chosen)
      if (Angulation::crosses(d, all[k])) return;
    chosen.push_back(all[k]);
    rec(k + 1);
    chosen.pop_back();
  };
  rec(0);
}

/// AP_s by brute force over P(|s| - l(s) + 2).
inline std::vector<Angulation> enumerate_angulations_brute(
    const Composition& s, std::size_t cap = default_enumeration_cap) {
  std::vector<Angulation> out;
  for_each_angulation(static_cast<int>(s.excess()) + 2,
                      [&](const Angulation& a) {
                        if (signature_of_angulation(a) != s) return;
                        if (out.size() >= cap) throw cap_exceeded(cap);
                        out.push_back(a);
                      });
  std::sort(out.begin(), out.end());
  return out;
}

// text form "n=15; 1-9,3-7"
inline std::string to_string(const Angulation& a) {
  std::string out = "n=" + std::to_string(a.polygon_size()) + ";";
  for (std::size_t k = 0; k < a.diagonals().size(); ++k) {
    out += k ? "," : " ";
    out += std::to_string(a.diagonals()[k].first) + "-" +
           std::to_string(a.diagonals()[k].second);
  }
  return out;
}

inline Angulation parse_angulation(std::string_view text) {
  std::string t(text);
  std::erase(t, ' ');
  if (t.rfind("n=", 0) != 0)
    throw std::invalid_argument("angulation text must look like 'n=6; 1-3,3-5'");
  const auto semi = t.find(';');
  const int n = std::stoi(t.substr(2, semi - 2));
  std::vector<std::pair<int, int>> diags;
  if (semi != std::string::npos && semi + 1 < t.size()) {
    for (const auto& item : [&] {
           std::vector<std::string> parts;
           std::size_t start = semi + 1;
           while (true) {
             const auto comma = t.find(',', start);
             parts.push_back(t.substr(start, comma - start));
             if (comma == std::string::npos) break;
             start = comma + 1;
           }
           return parts;
         }()) {
      const auto dash = item.find('-');
      if (dash == std::string::npos)
        throw std::invalid_argument("diagonal must look like i-j");
      diags.emplace_back(std::stoi(item.substr(0, dash)),
                         std::stoi(item.substr(dash + 1)));
    }
  }
  return Angulation(n, std::move(diags));
}

// ---------------------------------------------------------------------------
// parenthesizations

/// Letters '*', '(' and ')'; balanced, every prefix has at least as many
/// '(' as ')', and no "()" factor.
inline bool is_valid_parenthesization(std::string_view w) {
  if (w.empty()) return false;
  long depth = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const char c = w[i];
    if (c == '(') {
      ++depth;
      if (i + 1 < w.size() && w[i + 1] == ')') return false;
    } else if (c == ')') {
      if (--depth < 0) return false;
    } else if (c != '*') {
      return false;
    }
  }
  return depth == 0;
}

/// Splits a proper word into its maximal blocks: single stars and
/// parenthesized segments closing at depth zero.
inline std::vector<std::string> block_factorization(std::string_view w) {
  if (!is_valid_parenthesization(w))
    throw std::invalid_argument("not a proper parenthesization");
  std::vector<std::string> blocks;
  std::size_t start = 0;
  long depth = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    depth += (w[i] == '(') - (w[i] == ')');
    if (depth == 0) {
      blocks.emplace_back(w.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  return blocks;
}

namespace detail {

// A word u of blocks is a node with one child per block; "*" is a leaf and
// "(v)" is the node of v.
inline void parenthesized_degrees(std::string_view u, std::vector<int>& out) {
  const auto blocks = block_factorization(u);
  out.push_back(static_cast<int>(blocks.size()));
  for (const auto& b : blocks) {
    if (b == "*")
      out.push_back(0);
    else
      parenthesized_degrees(std::string_view(b).substr(1, b.size() - 2), out);
  }
}

inline void parenthesize(const PlanarTree& t, std::size_t node,
                         std::string& out) {
  std::size_t child = node + 1;
  for (int k = 0; k < t.degree(node); ++k) {
    if (t.is_leaf(child)) {
      out.push_back('*');
    } else {
      out.push_back('(');
      parenthesize(t, child, out);
      out.push_back(')');
    }
    child = t.subtree_end(child);
  }
}

}  // namespace detail

/// Tree read off a proper word. "*" alone is the identity tree. A word that
/// is one parenthesized block is read with that outer pair removed, so the
/// redundant outermost pair may be present or omitted.
inline PlanarTree parenthesization_tree(std::string_view w) {
  if (!is_valid_parenthesization(w))
    throw std::invalid_argument("not a proper parenthesization");
  if (w == "*") return identity_tree();
  const auto blocks = block_factorization(w);
  std::vector<int> degrees;
  if (blocks.size() == 1)
    detail::parenthesized_degrees(w.substr(1, w.size() - 2), degrees);
  else
    detail::parenthesized_degrees(w, degrees);
  return PlanarTree(std::move(degrees));
}

inline Composition signature_of_parenthesization(std::string_view w) {
  return signature(parenthesization_tree(w));
}

/// Canonical word of a tree: the outermost pair is omitted unless the root
/// has a single child, where it is needed to tell the word apart from the
/// words of smaller trees.
inline std::string parenthesization_of(const PlanarTree& t) {
  if (t.is_identity()) return "*";
  std::string inner;
  detail::parenthesize(t, 0, inner);
  if (t.degree(0) == 1) return "(" + inner + ")";
  return inner;
}

}  // namespace scat
