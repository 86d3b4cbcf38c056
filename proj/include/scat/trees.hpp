#pragma once

// Planar rooted trees stored as their full preorder degree sequence.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scat/signatures.hpp"

namespace scat {

/// A planar rooted tree, encoded by the degree of every node in preorder.
/// Leaves carry degree 0; the identity tree is the sequence (0).
class PlanarTree {
public:
  PlanarTree() : degrees_{0} {}
  PlanarTree(std::initializer_list<int> degrees)
      : PlanarTree(std::vector<int>(degrees)) {}
  explicit PlanarTree(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (!is_valid_degree_sequence(degrees_))
      throw std::invalid_argument("not a preorder degree sequence of a tree");
  }

  /// Lukasiewicz condition: 1 + sum(first p degrees) > p for every proper
  /// prefix, with equality at the full length.
  static bool is_valid_degree_sequence(std::span<const int> d) {
    if (d.empty()) return false;
    long open = 1;
    for (std::size_t p = 0; p < d.size(); ++p) {
      if (d[p] < 0 || open <= 0) return false;
      open += d[p] - 1;
    }
    return open == 0;
  }

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::size_t node_count() const noexcept { return degrees_.size(); }
  int degree(std::size_t node) const { return degrees_[node]; }
  bool is_leaf(std::size_t node) const { return degrees_[node] == 0; }
  bool is_identity() const noexcept { return degrees_.size() == 1; }

  std::size_t leaf_count() const noexcept {
    std::size_t n = 0;
    for (int d : degrees_) n += (d == 0);
    return n;
  }

  /// Preorder positions of the internal nodes; entry k-1 is v_k.
  std::vector<std::size_t> internal_nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degrees_.size(); ++i)
      if (degrees_[i] > 0) out.push_back(i);
    return out;
  }

  /// Parent of every node in preorder (the root maps to npos).
  std::vector<std::size_t> parents() const {
    std::vector<std::size_t> parent(degrees_.size(), npos);
    std::vector<std::pair<std::size_t, int>> stack;  // (node, children left)
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (!stack.empty()) {
        parent[i] = stack.back().first;
        if (--stack.back().second == 0) stack.pop_back();
      }
      if (degrees_[i] > 0) stack.emplace_back(i, degrees_[i]);
    }
    return parent;
  }

  /// Children of every node, left to right.
  std::vector<std::vector<std::size_t>> children() const {
    std::vector<std::vector<std::size_t>> out(degrees_.size());
    const auto parent = parents();
    for (std::size_t i = 1; i < degrees_.size(); ++i)
      out[parent[i]].push_back(i);
    return out;
  }

  /// One past the last preorder position of the subtree rooted at node.
  std::size_t subtree_end(std::size_t node) const {
    long open = 1;
    std::size_t i = node;
    while (open > 0) open += degrees_[i++] - 1;
    return i;
  }

  PlanarTree subtree(std::size_t node) const {
    return PlanarTree(std::vector<int>(degrees_.begin() + node,
                                       degrees_.begin() + subtree_end(node)));
  }

  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
  friend auto operator<=>(const PlanarTree&, const PlanarTree&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::vector<int> degrees_;
};

inline PlanarTree identity_tree() { return PlanarTree{}; }

/// The unique tree with signature (k).
inline PlanarTree corolla(int k) {
  if (k < 1) throw std::invalid_argument("corolla arity must be >= 1");
  std::vector<int> d(static_cast<std::size_t>(k) + 1, 0);
  d[0] = k;
  return PlanarTree(std::move(d));
}

/// Degrees of the internal nodes in preorder.
inline Composition signature(const PlanarTree& t) {
  std::vector<int> out;
  for (int d : t.degrees())
    if (d > 0) out.push_back(d);
  return Composition(std::move(out));
}

/// [T_1, ..., T_k]: a new root whose children are the given roots.
inline PlanarTree join(std::span<const PlanarTree> kids) {
  if (kids.empty()) throw std::invalid_argument("join needs at least one tree");
  std::vector<int> d{static_cast<int>(kids.size())};
  for (const auto& k : kids)
    d.insert(d.end(), k.degrees().begin(), k.degrees().end());
  return PlanarTree(std::move(d));
}

struct TreeDecomposition {
  int arity;
  std::vector<PlanarTree> children;
};

/// T = [T_1, ..., T_k] with k the root degree.
inline TreeDecomposition catalan_decompose_tree(const PlanarTree& t) {
  if (t.is_identity())
    throw std::invalid_argument("the identity tree has no decomposition");
  TreeDecomposition out{t.degree(0), {}};
  std::size_t pos = 1;
  for (int i = 0; i < out.arity; ++i) {
    const std::size_t end = t.subtree_end(pos);
    out.children.emplace_back(std::vector<int>(t.degrees().begin() + pos,
                                               t.degrees().begin() + end));
    pos = end;
  }
  return out;
}

/// Root is labeled 0; the i-th child from the right gets parent label + i-1.
inline std::vector<int> area_labeling(const PlanarTree& t) {
  std::vector<int> label(t.node_count(), 0);
  const auto kids = t.children();
  for (std::size_t v = 0; v < t.node_count(); ++v) {
    const auto& c = kids[v];
    for (std::size_t j = 0; j < c.size(); ++j)
      label[c[j]] = label[v] + static_cast<int>(c.size() - 1 - j);
  }
  return label;
}

/// Area labels restricted to internal nodes, in preorder.
inline std::vector<int> internal_area_labels(const PlanarTree& t) {
  const auto all = area_labeling(t);
  std::vector<int> out;
  for (std::size_t v : t.internal_nodes()) out.push_back(all[v]);
  return out;
}

/// A cavern is identified with the nonminimal child closing it.
struct Cavern {
  std::size_t owner;     ///< 1-based preorder index among internal nodes
  std::size_t position;  ///< 1-based gap index among the owner's children
  std::size_t node;      ///< preorder position of the nonminimal child
  friend bool operator==(const Cavern&, const Cavern&) = default;
};

/// Caverns in the preorder of their nonminimal children.
inline std::vector<Cavern> caverns(const PlanarTree& t) {
  const auto parent = t.parents();
  std::vector<std::size_t> internal_index(t.node_count(), 0);
  std::size_t k = 0;
  for (std::size_t v = 0; v < t.node_count(); ++v)
    if (!t.is_leaf(v)) internal_index[v] = ++k;
  std::vector<std::size_t> child_rank(t.node_count(), 0);
  std::vector<std::size_t> seen(t.node_count(), 0);
  std::vector<Cavern> out;
  for (std::size_t v = 1; v < t.node_count(); ++v) {
    const std::size_t p = parent[v];
    child_rank[v] = ++seen[p];
    if (child_rank[v] > 1)
      out.push_back({internal_index[p], child_rank[v] - 1, v});
  }
  return out;
}

/// Owner of every cavern in preorder: the word read off by preorder labels.
inline std::vector<int> cavern_owners(const PlanarTree& t) {
  std::vector<int> out;
  for (const auto& c : caverns(t)) out.push_back(static_cast<int>(c.owner));
  return out;
}

/// True iff node is the leftmost child of its parent.
inline std::vector<bool> minimal_child_flags(const PlanarTree& t) {
  std::vector<bool> out(t.node_count(), false);
  for (std::size_t v = 0; v + 1 < t.node_count(); ++v)
    if (!t.is_leaf(v)) out[v + 1] = true;
  return out;
}

/// v together with the internal nodes reachable by leftmost-child steps,
/// as 1-based internal indices (a contiguous run).
inline std::vector<std::size_t> left_descendants(const PlanarTree& t,
                                                 std::size_t v) {
  const auto internal = t.internal_nodes();
  if (v < 1 || v > internal.size())
    throw std::invalid_argument("left_descendants needs an internal index");
  std::vector<std::size_t> out{v};
  std::size_t node = internal[v - 1];
  std::size_t idx = v;
  // the leftmost child of a node is the next node in preorder
  while (node + 1 < t.node_count() && !t.is_leaf(node + 1)) {
    ++node;
    out.push_back(++idx);
  }
  return out;
}

/// Operadic composition: the root of subtrees[i] replaces the i-th leaf.
inline PlanarTree graft(const PlanarTree& t,
                        std::span<const PlanarTree> subtrees) {
  if (subtrees.size() != t.leaf_count())
    throw std::invalid_argument("graft needs one subtree per leaf");
  std::vector<int> d;
  std::size_t next = 0;
  for (int deg : t.degrees()) {
    if (deg == 0) {
      const auto& s = subtrees[next++].degrees();
      d.insert(d.end(), s.begin(), s.end());
    } else {
      d.push_back(deg);
    }
  }
  return PlanarTree(std::move(d));
}

/// Tree whose internal node v_i is followed by exactly mu(i) leaves before
/// v_{i+1} in preorder. This is the tree read off an NE word.
inline PlanarTree tree_from_gaps(const Composition& s,
                                 const WeakComposition& mu) {
  if (s.empty()) return identity_tree();
  std::vector<int> d;
  for (std::size_t i = 0; i < s.length(); ++i) {
    d.push_back(s[i]);
    d.insert(d.end(), static_cast<std::size_t>(mu[i]), 0);
  }
  d.push_back(0);
  return PlanarTree(std::move(d));
}

/// Visits every s-tree exactly once, in lexicographic order of the leaf-gap
/// vector (equivalently of the east-step vector of its Dyck path).
inline void for_each_tree(const Composition& s,
                          const std::function<void(const PlanarTree&)>& fn,
                          std::size_t cap = default_enumeration_cap) {
  std::size_t n = 0;
  for_each_dominated(minus_one(s), [&](const WeakComposition& mu) {
    if (++n > cap) throw cap_exceeded(cap);
    fn(tree_from_gaps(s, mu));
  });
}

inline std::vector<PlanarTree> enumerate_trees(
    const Composition& s, std::size_t cap = default_enumeration_cap) {
  std::vector<PlanarTree> out;
  for_each_tree(s, [&](const PlanarTree& t) { out.push_back(t); }, cap);
  return out;
}

/// Tree in which every internal node is the root or a leftmost child.
inline PlanarTree left_comb(const Composition& s) {
  if (s.empty()) return identity_tree();
  std::vector<int> d(s.begin(), s.end());
  d.push_back(0);  // leftmost child of the deepest internal node
  for (std::size_t i = s.length(); i-- > 0;)
    d.insert(d.end(), static_cast<std::size_t>(s[i] - 1), 0);
  return PlanarTree(std::move(d));
}

// text form "[3,4,0,0,...]"
inline std::string to_string(const PlanarTree& t) {
  return "[" + join_ints(t.degrees()) + "]";
}
inline PlanarTree parse_tree(std::string_view text) {
  std::string body(text);
  while (!body.empty() && body.front() == ' ') body.erase(body.begin());
  while (!body.empty() && body.back() == ' ') body.pop_back();
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw std::invalid_argument("tree text must look like [d1,d2,...]");
  return PlanarTree(parse_int_list(body.substr(1, body.size() - 2)));
}

}  // namespace scat
