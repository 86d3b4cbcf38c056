#pragma once

// mu-parking functions and their two decorated models: Dyck paths with
// labeled north steps and trees with labeled internal nodes.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scat/bijections.hpp"
#include "scat/paths.hpp"
#include "scat/signatures.hpp"
#include "scat/stirling.hpp"
#include "scat/trees.hpp"

namespace scat {

/// bound[i] = mu(1) + ... + mu(i): the largest value allowed at sorted
/// position i+1.
inline std::vector<long> parking_bounds(const WeakComposition& mu) {
  std::vector<long> out(mu.length(), 0);
  for (std::size_t i = 1; i < mu.length(); ++i) out[i] = out[i - 1] + mu[i - 1];
  return out;
}

/// Sorted preferences q satisfy q_1 = 0 and q_i <= mu(1) + ... + mu(i-1).
inline bool is_parking(const std::vector<int>& p, const WeakComposition& mu) {
  if (p.size() != mu.length()) return false;
  std::vector<int> q = p;
  std::sort(q.begin(), q.end());
  const auto bound = parking_bounds(mu);
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] < 0 || q[i] > bound[i]) return false;
  return true;
}

class ParkingFunction {
public:
  ParkingFunction() = default;
  ParkingFunction(std::vector<int> prefs, WeakComposition mu)
      : prefs_(std::move(prefs)), mu_(std::move(mu)) {
    if (!is_parking(prefs_, mu_))
      throw std::invalid_argument("not a mu-parking function");
  }

  const std::vector<int>& prefs() const noexcept { return prefs_; }
  const WeakComposition& mu() const noexcept { return mu_; }
  std::size_t size() const noexcept { return prefs_.size(); }

  friend bool operator==(const ParkingFunction&,
                         const ParkingFunction&) = default;
  friend auto operator<=>(const ParkingFunction&,
                          const ParkingFunction&) = default;

private:
  std::vector<int> prefs_;
  WeakComposition mu_;
};

/// Every mu-parking function in lexicographic order. A prefix is kept only
/// if padding it with zeros could still sort under the bounds.
inline void for_each_parking(const WeakComposition& mu,
                             const std::function<void(const ParkingFunction&)>& fn,
                             std::size_t cap = default_enumeration_cap) {
  const std::size_t a = mu.length();
  const auto bound = parking_bounds(mu);
  const long top = a ? bound.back() : 0;
  std::vector<int> cur;
  std::vector<int> sorted;
  std::size_t n = 0;
  std::function<void()> rec = [&] {
    const std::size_t m = cur.size();
    if (m == a) {
      if (++n > cap) throw cap_exceeded(cap);
      fn(ParkingFunction(cur, mu));
      return;
    }
    for (long v = 0; v <= top; ++v) {
      auto pos = std::upper_bound(sorted.begin(), sorted.end(), static_cast<int>(v));
      pos = sorted.insert(pos, static_cast<int>(v));
      bool ok = true;
      for (std::size_t j = 0; j < sorted.size() && ok; ++j)
        ok = sorted[j] <= bound[a - (m + 1) + j];
      if (ok) {
        cur.push_back(static_cast<int>(v));
        rec();
        cur.pop_back();
      }
      sorted.erase(std::find(sorted.begin(), sorted.end(), static_cast<int>(v)));
      // larger values only make the check harder
      if (!ok) break;
    }
  };
  rec();
}

inline std::vector<ParkingFunction> enumerate_parking(
    const WeakComposition& mu, std::size_t cap = default_enumeration_cap) {
  std::vector<ParkingFunction> out;
  for_each_parking(mu, [&](const ParkingFunction& p) { out.push_back(p); }, cap);
  return out;
}

inline BigInt count_parking(const WeakComposition& mu,
                            std::size_t cap = default_enumeration_cap) {
  BigInt n = 0;
  for_each_parking(mu, [&](const ParkingFunction&) { n += 1; }, cap);
  return n;
}

// ---------------------------------------------------------------------------
// decorated paths

/// North steps carry the labels 1..a (labels()[r] belongs to row r); labels
/// increase up every run of consecutive north steps.
class DecoratedPath {
public:
  DecoratedPath() = default;
  DecoratedPath(DyckPath path, std::vector<int> labels)
      : path_(std::move(path)), labels_(std::move(labels)) {
    check_labels(labels_, path_.north_steps());
    for (const auto& run : north_runs(path_))
      for (std::size_t k = 1; k < run.size(); ++k)
        if (labels_[run[k]] < labels_[run[k - 1]])
          throw std::invalid_argument(
              "labels must increase along consecutive north steps");
  }

  static void check_labels(const std::vector<int>& labels, std::size_t a) {
    if (labels.size() != a)
      throw std::invalid_argument("one label per north step / internal node");
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < a; ++i)
      if (sorted[i] != static_cast<int>(i + 1))
        throw std::invalid_argument("labels must be a permutation of 1..a");
  }

  const DyckPath& path() const noexcept { return path_; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  friend bool operator==(const DecoratedPath&, const DecoratedPath&) = default;

private:
  DyckPath path_;
  std::vector<int> labels_;
};

/// p_i = number of east steps left of the north step labeled i.
inline ParkingFunction decorated_path_to_parking(const DecoratedPath& dp) {
  const auto x = north_step_columns(dp.path());
  std::vector<int> p(dp.labels().size(), 0);
  for (std::size_t r = 0; r < x.size(); ++r)
    p[static_cast<std::size_t>(dp.labels()[r] - 1)] = static_cast<int>(x[r]);
  return ParkingFunction(std::move(p), minus_one(dp.path().signature()));
}

/// Cars sorted by preference (ties by label) take the rows bottom to top;
/// each north step sits p_i east steps from the left.
inline DecoratedPath parking_to_decorated_path(const ParkingFunction& pf,
                                               const Composition& s) {
  if (pf.mu() != minus_one(s))
    throw std::invalid_argument("parking parameter must be s - 1");
  const std::size_t a = s.length();
  std::vector<int> cars(a);
  std::iota(cars.begin(), cars.end(), 1);
  const auto& p = pf.prefs();
  std::stable_sort(cars.begin(), cars.end(), [&](int u, int v) {
    return p[static_cast<std::size_t>(u - 1)] < p[static_cast<std::size_t>(v - 1)];
  });
  std::vector<int> mu(a, 0);
  for (std::size_t r = 0; r < a; ++r) {
    const long here = p[static_cast<std::size_t>(cars[r] - 1)];
    const long next = r + 1 < a ? p[static_cast<std::size_t>(cars[r + 1] - 1)]
                                : s.excess();
    mu[r] = static_cast<int>(next - here);
  }
  return DecoratedPath(DyckPath(s, WeakComposition(std::move(mu))),
                       std::move(cars));
}

// ---------------------------------------------------------------------------
// decorated trees

/// Internal nodes carry the labels 1..a (labels()[k] belongs to v_{k+1});
/// a leftmost child has a larger label than its parent.
class DecoratedTree {
public:
  DecoratedTree() = default;
  DecoratedTree(PlanarTree tree, std::vector<int> labels)
      : tree_(std::move(tree)), labels_(std::move(labels)) {
    const auto internal = tree_.internal_nodes();
    DecoratedPath::check_labels(labels_, internal.size());
    for (std::size_t k = 1; k < internal.size(); ++k)
      if (internal[k] == internal[k - 1] + 1 && labels_[k] < labels_[k - 1])
        throw std::invalid_argument(
            "a leftmost child must have a larger label than its parent");
  }

  const PlanarTree& tree() const noexcept { return tree_; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  friend bool operator==(const DecoratedTree&, const DecoratedTree&) = default;

private:
  PlanarTree tree_;
  std::vector<int> labels_;
};

/// Leaves numbered from 0 in preorder; p_i is the number of the leftmost
/// leaf below the node labeled i, i.e. the leaves before it in preorder.
inline ParkingFunction decorated_tree_to_parking(const DecoratedTree& dt) {
  const auto& t = dt.tree();
  std::vector<int> p(dt.labels().size(), 0);
  int leaves = 0;
  std::size_t k = 0;
  for (std::size_t v = 0; v < t.node_count(); ++v) {
    if (t.is_leaf(v))
      ++leaves;
    else
      p[static_cast<std::size_t>(dt.labels()[k++] - 1)] = leaves;
  }
  return ParkingFunction(std::move(p), minus_one(signature(t)));
}

/// Labels travel with the preorder of internal nodes / order of north steps.
inline DecoratedPath decorated_tree_to_path(const DecoratedTree& dt) {
  return DecoratedPath(tree_to_path(dt.tree()), dt.labels());
}

inline DecoratedTree decorated_path_to_tree(const DecoratedPath& dp) {
  return DecoratedTree(path_to_tree(dp.path()), dp.labels());
}

namespace detail {

// all labelings 1..a accepted by make (which throws on invalid ones)
template <class T, class Make>
void for_each_labeling(std::size_t a, Make make,
                       const std::function<void(const T&)>& fn) {
  std::vector<int> labels(a);
  std::iota(labels.begin(), labels.end(), 1);
  do {
    try {
      const T obj = make(labels);
      fn(obj);
    } catch (const std::invalid_argument&) {
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
}

}  // namespace detail

inline std::vector<DecoratedPath> enumerate_decorated_paths(
    const Composition& s, std::size_t cap = default_enumeration_cap) {
  std::vector<DecoratedPath> out;
  for_each_path(
      s,
      [&](const DyckPath& d) {
        detail::for_each_labeling<DecoratedPath>(
            s.length(),
            [&](const std::vector<int>& l) { return DecoratedPath(d, l); },
            [&](const DecoratedPath& dp) {
              if (out.size() >= cap) throw cap_exceeded(cap);
              out.push_back(dp);
            });
      },
      cap);
  return out;
}

inline std::vector<DecoratedTree> enumerate_decorated_trees(
    const Composition& s, std::size_t cap = default_enumeration_cap) {
  std::vector<DecoratedTree> out;
  for_each_tree(
      s,
      [&](const PlanarTree& t) {
        detail::for_each_labeling<DecoratedTree>(
            s.length(),
            [&](const std::vector<int>& l) { return DecoratedTree(t, l); },
            [&](const DecoratedTree& dt) {
              if (out.size() >= cap) throw cap_exceeded(cap);
              out.push_back(dt);
            });
      },
      cap);
  return out;
}

// text forms: "0,4,0,5,4,0,3"; decorated objects append "; labels=..."
inline std::string to_string(const ParkingFunction& pf) {
  return join_ints(pf.prefs());
}
inline std::string to_string(const DecoratedPath& dp) {
  return to_string(dp.path()) + "; labels=" + join_ints(dp.labels());
}
inline std::string to_string(const DecoratedTree& dt) {
  return to_string(dt.tree()) + "; labels=" + join_ints(dt.labels());
}

}  // namespace scat
