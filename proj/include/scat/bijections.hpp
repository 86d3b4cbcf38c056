#pragma once

// Bijections between s-trees and the other families, their inverses, the
// direct path-side maps and the statistics they transport.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scat/noncrossing.hpp"
#include "scat/paths.hpp"
#include "scat/polygons_words.hpp"
#include "scat/signatures.hpp"
#include "scat/stirling.hpp"
#include "scat/trees.hpp"

namespace scat {

inline void require_all_at_least_two(const Composition& s, const char* what) {
  if (!s.all_at_least(2))
    throw std::invalid_argument(std::string(what) +
                                " needs every signature entry >= 2");
}

// ---------------------------------------------------------------------------
// trees and paths

/// N for every internal node, E for every leaf, in preorder.
inline DyckPath tree_to_path(const PlanarTree& t) {
  std::string w;
  for (int d : t.degrees()) w.push_back(d > 0 ? 'N' : 'E');
  return path_from_word(signature(t), w);
}

/// Grows the tree one internal node at a time: v_{i+1} replaces the
/// (mu(i)+1)-th leaf after v_i in preorder.
inline PlanarTree path_to_tree(const DyckPath& d) {
  if (d.is_identity()) return identity_tree();
  const auto& s = d.signature();
  const auto& mu = d.mu();
  std::vector<int> deg(static_cast<std::size_t>(s[0]) + 1, 0);
  deg[0] = s[0];
  std::size_t at = 0;
  for (std::size_t i = 0; i + 1 < s.length(); ++i) {
    int want = mu[i] + 1;
    std::size_t p = at + 1;
    for (; p < deg.size(); ++p)
      if (deg[p] == 0 && --want == 0) break;
    if (p >= deg.size())
      throw std::invalid_argument("path leaves the ribbon: no leaf to attach to");
    deg[p] = s[i + 1];
    deg.insert(deg.begin() + static_cast<long>(p) + 1,
               static_cast<std::size_t>(s[i + 1]), 0);
    at = p;
  }
  return PlanarTree(std::move(deg));
}

// ---------------------------------------------------------------------------
// trees and Stirling permutations

/// Sigma restricted to preorder labels: owners of the caverns in preorder.
inline Multipermutation tree_to_stirling(const PlanarTree& t) {
  if (t.is_identity()) return Multipermutation{};
  require_all_at_least_two(signature(t), "the Stirling bijection");
  return Multipermutation(cavern_owners(t));
}

/// Sigma: cavern owners' labels, read in preorder.
inline Multipermutation increasing_tree_to_stirling(const IncreasingTree& it) {
  if (it.tree().is_identity()) return Multipermutation{};
  require_all_at_least_two(signature(it.tree()), "the Stirling bijection");
  std::vector<int> w;
  for (const auto& c : caverns(it.tree()))
    w.push_back(it.labels()[c.owner - 1]);
  return Multipermutation(std::move(w));
}

/// Lambda: the smallest letter is the root; its occurrences cut the word
/// into pieces that become the subtrees (empty pieces become leaves).
inline IncreasingTree stirling_to_increasing_tree(const Multipermutation& sigma) {
  if (!is_stirling(sigma))
    throw std::invalid_argument("not a Stirling permutation (contains 212)");
  if (sigma.size() == 0) return IncreasingTree(identity_tree(), {});
  const auto& w = sigma.word();
  std::vector<int> deg;
  std::vector<int> labels;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t lo,
                                                           std::size_t hi) {
    if (lo == hi) {
      deg.push_back(0);
      return;
    }
    const int m = *std::min_element(w.begin() + static_cast<long>(lo),
                                    w.begin() + static_cast<long>(hi));
    std::vector<std::size_t> cuts{lo};
    for (std::size_t i = lo; i < hi; ++i)
      if (w[i] == m) cuts.push_back(i + 1);
    deg.push_back(static_cast<int>(cuts.size()));
    labels.push_back(m);
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      const std::size_t end = k + 1 < cuts.size() ? cuts[k + 1] - 1 : hi;
      rec(cuts[k], end);
    }
  };
  rec(0, w.size());
  return IncreasingTree(PlanarTree(std::move(deg)), std::move(labels));
}

/// Lambda with the labels forgotten; only 312-avoiding words come from
/// preorder labelings, so anything else is rejected.
inline PlanarTree stirling_to_tree(const Multipermutation& sigma) {
  if (!is_312_avoiding_stirling(sigma))
    throw std::invalid_argument("not a 312-avoiding Stirling permutation");
  const auto it = stirling_to_increasing_tree(sigma);
  if (tree_to_stirling(it.tree()) != sigma)
    throw std::logic_error("Stirling word does not come from a preorder labeling");
  return it.tree();
}

// ---------------------------------------------------------------------------
// trees and noncrossing partitions

/// Caverns (numbered in preorder) grouped by maximal left-descendant
/// subtrees.
inline SetPartition tree_to_partition(const PlanarTree& t) {
  if (t.is_identity()) return SetPartition{};
  require_all_at_least_two(signature(t), "the partition bijection");
  const auto cav = caverns(t);
  const auto internal = t.internal_nodes();
  // an internal node heads a maximal chain unless it is a leftmost child
  std::vector<std::size_t> head_of(internal.size() + 1, 0);
  for (std::size_t k = 1; k <= internal.size(); ++k) {
    const std::size_t v = internal[k - 1];
    const bool leftmost = v > 0 && !t.is_leaf(v - 1);
    head_of[k] = leftmost ? head_of[k - 1] : k;
  }
  std::vector<std::vector<int>> blocks;
  std::vector<std::size_t> block_index(internal.size() + 1, 0);
  for (std::size_t k = 1; k <= internal.size(); ++k)
    if (head_of[k] == k) {
      block_index[k] = blocks.size();
      blocks.emplace_back();
    }
  for (std::size_t c = 0; c < cav.size(); ++c)
    blocks[block_index[head_of[cav[c].owner]]].push_back(static_cast<int>(c + 1));
  return SetPartition(std::move(blocks));
}

/// psi: one left comb per block, glued at the leaf closing cavern
/// min(block) - 1; the result is checked against phi.
inline PlanarTree partition_to_tree(const SetPartition& pi, const Composition& s) {
  if (s.empty()) {
    if (pi.ground_size() != 0)
      throw std::invalid_argument("the identity tree has no caverns");
    return identity_tree();
  }
  require_all_at_least_two(s, "the partition bijection");
  if (pi.ground_size() != static_cast<std::size_t>(s.excess()))
    throw std::invalid_argument("partition size must be |s| - l(s)");
  if (!is_noncrossing(pi))
    throw std::invalid_argument("partition is not noncrossing");

  std::vector<int> deg;
  std::vector<int> cavern_label;  // label of the cavern a node closes, or 0
  std::size_t next = 0;
  for (const auto& block : pi.blocks()) {
    std::vector<int> piece;
    long need = static_cast<long>(block.size());
    while (need > 0 && next < s.length()) {
      piece.push_back(s[next]);
      need -= s[next++] - 1;
    }
    if (need != 0)
      throw std::invalid_argument("block sizes are not sums of consecutive s(i)-1");
    const PlanarTree comb = left_comb(Composition(piece));
    std::vector<int> comb_label(comb.node_count(), 0);
    const auto cav = caverns(comb);
    for (std::size_t c = 0; c < cav.size(); ++c) comb_label[cav[c].node] = block[c];

    if (deg.empty()) {
      if (block.front() != 1)
        throw std::invalid_argument("first block must contain 1");
      deg = comb.degrees();
      cavern_label = comb_label;
      continue;
    }
    const int target = block.front() - 1;
    const auto it = std::find(cavern_label.begin(), cavern_label.end(), target);
    const std::size_t p = static_cast<std::size_t>(it - cavern_label.begin());
    if (it == cavern_label.end() || deg[p] != 0)
      throw std::invalid_argument("partition cannot be glued into an s-tree");
    deg.erase(deg.begin() + static_cast<long>(p));
    deg.insert(deg.begin() + static_cast<long>(p), comb.degrees().begin(),
               comb.degrees().end());
    comb_label[0] = target;
    cavern_label.erase(cavern_label.begin() + static_cast<long>(p));
    cavern_label.insert(cavern_label.begin() + static_cast<long>(p),
                        comb_label.begin(), comb_label.end());
  }
  if (next != s.length())
    throw std::invalid_argument("partition does not use the whole signature");
  PlanarTree t(std::move(deg));
  if (signature(t) != s || tree_to_partition(t) != pi)
    throw std::invalid_argument("partition is not a noncrossing (s-1)-partition");
  return t;
}

// ---------------------------------------------------------------------------
// trees and complete matchings

/// Nodes numbered 0..|s| in preorder; block k holds the children of v_k.
inline Matching tree_to_matching(const PlanarTree& t) {
  const auto kids = t.children();
  std::vector<std::vector<int>> blocks;
  for (std::size_t v : t.internal_nodes()) {
    blocks.emplace_back();
    for (std::size_t c : kids[v]) blocks.back().push_back(static_cast<int>(c));
  }
  return Matching(SetPartition(std::move(blocks)), signature(t));
}

/// Every element of block M_k hangs from node min(M_k) - 1.
inline PlanarTree matching_to_tree(const Matching& m) {
  const auto& blocks = m.partition().blocks();
  const std::size_t n = m.partition().ground_size();
  std::vector<std::vector<std::size_t>> kids(n + 1);
  for (const auto& b : blocks)
    for (int x : b) kids[static_cast<std::size_t>(b.front() - 1)].push_back(
        static_cast<std::size_t>(x));
  std::vector<int> deg;
  std::function<bool(std::size_t)> rec = [&](std::size_t v) {
    if (v != deg.size()) return false;  // preorder must reproduce the numbering
    deg.push_back(static_cast<int>(kids[v].size()));
    for (std::size_t c : kids[v])
      if (!rec(c)) return false;
    return true;
  };
  if (!rec(0) || deg.size() != n + 1)
    throw std::invalid_argument("matching does not number a tree in preorder");
  return PlanarTree(std::move(deg));
}

// ---------------------------------------------------------------------------
// trees, angulations and parenthesizations

/// A subtree with L leaves spans L+1 consecutive boundary positions; every
/// internal non-root node contributes the diagonal closing its span.
inline Angulation tree_to_angulation(const PlanarTree& t) {
  if (t.is_identity()) return Angulation{};
  require_all_at_least_two(signature(t), "the angulation bijection");
  const int n = static_cast<int>(t.leaf_count()) + 1;
  std::vector<int> leaves(t.node_count(), 0);
  for (std::size_t v = t.node_count(); v-- > 0;) {
    if (t.is_leaf(v)) {
      leaves[v] = 1;
      continue;
    }
    std::size_t c = v + 1;
    for (int k = 0; k < t.degree(v); ++k) {
      leaves[v] += leaves[c];
      c = t.subtree_end(c);
    }
  }
  std::vector<std::pair<int, int>> diags;
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int lo) {
    if (v != 0)
      diags.emplace_back(detail::angulation_vertex(n, lo),
                         detail::angulation_vertex(n, lo + leaves[v]));
    std::size_t c = v + 1;
    int at = lo;
    for (int k = 0; k < t.degree(v); ++k) {
      if (!t.is_leaf(c)) rec(c, at);
      at += leaves[c];
      c = t.subtree_end(c);
    }
  };
  rec(0, 0);
  return Angulation(n, std::move(diags));
}

inline PlanarTree angulation_to_tree(const Angulation& a) {
  return PlanarTree(detail::walk_angulation(a).degrees);
}

inline std::string tree_to_parenthesization(const PlanarTree& t) {
  return parenthesization_of(t);
}

inline PlanarTree parenthesization_to_tree(std::string_view w) {
  return parenthesization_tree(w);
}

// ---------------------------------------------------------------------------
// direct maps from paths

namespace detail {

/// Dot placement in the a x (|s|-l(s)) rectangle: working from the top row
/// down, row j receives s(j)-1 dots in the leftmost free columns to the
/// right of the north step of row j. Entry c-1 is the row (1-based) of the
/// dot in column c.
inline std::vector<int> path_dot_rows(const DyckPath& d) {
  const auto& s = d.signature();
  const auto x = north_step_columns(d);
  std::vector<int> row_of(static_cast<std::size_t>(s.excess()), 0);
  for (std::size_t j = s.length(); j-- > 0;) {
    int left = s[j] - 1;
    for (std::size_t c = static_cast<std::size_t>(x[j]);
         left > 0 && c < row_of.size(); ++c)
      if (row_of[c] == 0) {
        row_of[c] = static_cast<int>(j + 1);
        --left;
      }
    if (left > 0) throw std::logic_error("dot placement ran out of columns");
  }
  return row_of;
}

}  // namespace detail

inline Multipermutation path_to_stirling_direct(const DyckPath& d) {
  if (d.is_identity()) return Multipermutation{};
  require_all_at_least_two(d.signature(), "the Stirling bijection");
  return Multipermutation(detail::path_dot_rows(d));
}

/// Dot columns of each maximal run of north steps form one block.
inline SetPartition path_to_partition_direct(const DyckPath& d) {
  if (d.is_identity()) return SetPartition{};
  require_all_at_least_two(d.signature(), "the partition bijection");
  const auto row_of = detail::path_dot_rows(d);
  std::vector<std::size_t> run_of_row(d.north_steps(), 0);
  const auto runs = north_runs(d);
  for (std::size_t r = 0; r < runs.size(); ++r)
    for (std::size_t row : runs[r]) run_of_row[row] = r;
  std::vector<std::vector<int>> blocks(runs.size());
  for (std::size_t c = 0; c < row_of.size(); ++c)
    blocks[run_of_row[static_cast<std::size_t>(row_of[c] - 1)]].push_back(
        static_cast<int>(c + 1));
  return SetPartition(std::move(blocks));
}

/// Inverse through the peaks: the i-th run starts at x_i = min(pi_i) - 1 and
/// covers the rows whose s(j)-1 add up to |pi_i|.
inline DyckPath partition_to_path_direct(const SetPartition& pi,
                                         const Composition& s) {
  if (s.empty()) {
    if (pi.ground_size() != 0)
      throw std::invalid_argument("the identity path has no caverns");
    return identity_path();
  }
  require_all_at_least_two(s, "the partition bijection");
  if (pi.ground_size() != static_cast<std::size_t>(s.excess()))
    throw std::invalid_argument("partition size must be |s| - l(s)");
  std::vector<int> mu(s.length(), 0);
  std::size_t next = 0;
  const auto& blocks = pi.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    long need = static_cast<long>(blocks[i].size());
    while (need > 0 && next < s.length()) need -= s[next++] - 1;
    if (need != 0)
      throw std::invalid_argument("block sizes are not sums of consecutive s(i)-1");
    const int x_here = blocks[i].front() - 1;
    const int x_next = i + 1 < blocks.size() ? blocks[i + 1].front() - 1
                                             : static_cast<int>(s.excess());
    mu[next - 1] = x_next - x_here;
  }
  if (next != s.length() || blocks.front().front() != 1)
    throw std::invalid_argument("partition does not match any path");
  const WeakComposition m(std::move(mu));
  if (!dominance_leq(m, minus_one(s)))
    throw std::invalid_argument("partition does not match any path");
  DyckPath d(s, m);
  if (path_to_partition_direct(d) != pi)
    throw std::invalid_argument("partition does not match any path");
  return d;
}

/// Steps numbered 1..|s| (the final east step is left out); block i holds
/// the north step of row i and the east steps in the dot columns of row i.
inline Matching path_to_matching_direct(const DyckPath& d) {
  if (d.is_identity()) return Matching(SetPartition{}, Composition{});
  const std::string w = path_word(d);
  std::vector<int> north_label;
  std::vector<int> east_label;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    (w[i] == 'N' ? north_label : east_label).push_back(static_cast<int>(i + 1));
  // dot rows are defined for any signature: rows with s(j) = 1 get no dots
  std::vector<std::vector<int>> blocks(d.north_steps());
  for (std::size_t j = 0; j < d.north_steps(); ++j)
    blocks[j].push_back(north_label[j]);
  const auto row_of = detail::path_dot_rows(d);
  for (std::size_t c = 0; c < row_of.size(); ++c)
    blocks[static_cast<std::size_t>(row_of[c] - 1)].push_back(east_label[c]);
  return Matching(SetPartition(std::move(blocks)), d.signature());
}

/// The block minima are the positions of the north steps.
inline DyckPath matching_to_path_direct(const Matching& m) {
  const std::size_t n = m.partition().ground_size();
  std::string w(n, 'E');
  for (const auto& b : m.partition().blocks())
    w[static_cast<std::size_t>(b.front() - 1)] = 'N';
  w.push_back('E');
  DyckPath d = path_from_word(m.signature(), w);
  if (path_to_matching_direct(d) != m)
    throw std::invalid_argument("matching does not come from a path");
  return d;
}

// ---------------------------------------------------------------------------
// statistics

/// Leaves that are the leftmost child of their parent.
inline int leftmost_leaf_count(const PlanarTree& t) {
  int n = 0;
  for (std::size_t v = 0; v + 1 < t.node_count(); ++v)
    n += !t.is_leaf(v) && t.is_leaf(v + 1);
  return n;
}

/// Blocks M_i with min(M_i) + 1 in M_i.
inline int matching_min_plus_one_blocks(const Matching& m) {
  int n = 0;
  for (const auto& b : m.partition().blocks())
    n += b.size() > 1 && b[1] == b[0] + 1;
  return n;
}

// ---------------------------------------------------------------------------
// generators hubbed on trees

/// SP_c(312) in the canonical tree order, through Sigma~.
inline std::vector<Multipermutation> enumerate_312_avoiding(
    const Composition& content, std::size_t cap = default_enumeration_cap) {
  std::vector<Multipermutation> out;
  for_each_tree(
      plus_one(content),
      [&](const PlanarTree& t) { out.push_back(tree_to_stirling(t)); }, cap);
  return out;
}

}  // namespace scat
