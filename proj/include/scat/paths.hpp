#pragma once

// s-Dyck paths N E^{mu(1)} N E^{mu(2)} ... N E^{mu(a)} E lying weakly above
// the ribbon determined by s, i.e. mu <=_dom s - 1.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scat/signatures.hpp"

namespace scat {

class DyckPath {
public:
  /// The identity path E.
  DyckPath() = default;
  DyckPath(Composition s, WeakComposition mu)
      : s_(std::move(s)), mu_(std::move(mu)) {
    if (mu_.length() != s_.length())
      throw std::invalid_argument("path needs l(mu) = l(s)");
    if (mu_.sum() != s_.excess())
      throw std::invalid_argument("path needs |mu| = |s| - l(s)");
    if (!dominance_leq(mu_, minus_one(s_)))
      throw std::invalid_argument("path crosses the ribbon: mu not <=_dom s-1");
  }

  const Composition& signature() const noexcept { return s_; }
  const WeakComposition& mu() const noexcept { return mu_; }
  bool is_identity() const noexcept { return s_.empty(); }
  std::size_t north_steps() const noexcept { return s_.length(); }
  /// Number of east steps including the final one.
  long east_steps() const noexcept { return s_.excess() + 1; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
  Composition s_;
  WeakComposition mu_;
};

inline DyckPath identity_path() { return DyckPath{}; }

/// The path hugging the ribbon, mu = s - 1.
inline DyckPath maximal_path(const Composition& s) {
  return DyckPath(s, minus_one(s));
}

inline std::string path_word(const DyckPath& d) {
  std::string w;
  for (int m : d.mu()) {
    w.push_back('N');
    w.append(static_cast<std::size_t>(m), 'E');
  }
  w.push_back('E');
  return w;
}

/// Reads mu off an NE word; the word must end with its final east step.
inline WeakComposition mu_from_word(std::string_view word) {
  if (word.empty() || word.back() != 'E')
    throw std::invalid_argument("path word must end with E");
  if (word.size() > 1 && word.front() != 'N')
    throw std::invalid_argument("path word must start with N");
  std::vector<int> mu;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    const char c = word[i];
    if (c == 'N')
      mu.push_back(0);
    else if (c == 'E')
      ++mu.back();
    else
      throw std::invalid_argument("path word letters must be N or E");
  }
  return WeakComposition(std::move(mu));
}

inline DyckPath path_from_word(const Composition& s, std::string_view word) {
  return DyckPath(s, mu_from_word(word));
}

/// (0) + ((s-1) \_dom mu): boxes between the path and the ribbon, per row.
inline WeakComposition area_vector(const DyckPath& d) {
  if (d.is_identity()) return {};
  return concat(WeakComposition{0},
                dominance_diff(minus_one(d.signature()), d.mu()));
}

inline long area(const DyckPath& d) { return area_vector(d).sum(); }

/// Number of maximal runs of north steps (equivalently NE factors).
inline int peaks(const DyckPath& d) {
  const std::string w = path_word(d);
  int n = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    n += (w[i] == 'N' && w[i + 1] == 'E');
  return n;
}

/// Rows grouped by maximal runs of consecutive north steps (0-based rows).
inline std::vector<std::vector<std::size_t>> north_runs(const DyckPath& d) {
  std::vector<std::vector<std::size_t>> runs;
  for (std::size_t r = 0; r < d.north_steps(); ++r) {
    if (r == 0 || d.mu()[r - 1] > 0) runs.emplace_back();
    runs.back().push_back(r);
  }
  return runs;
}

/// x-coordinate of the north step in each row: sum of earlier east runs.
inline std::vector<long> north_step_columns(const DyckPath& d) {
  std::vector<long> out;
  long x = 0;
  for (int m : d.mu()) {
    out.push_back(x);
    x += m;
  }
  return out;
}

inline void for_each_path(const Composition& s,
                          const std::function<void(const DyckPath&)>& fn,
                          std::size_t cap = default_enumeration_cap) {
  std::size_t n = 0;
  for_each_dominated(minus_one(s), [&](const WeakComposition& mu) {
    if (++n > cap) throw cap_exceeded(cap);
    fn(DyckPath(s, mu));
  });
}

inline std::vector<DyckPath> enumerate_paths(
    const Composition& s, std::size_t cap = default_enumeration_cap) {
  std::vector<DyckPath> out;
  for_each_path(s, [&](const DyckPath& d) { out.push_back(d); }, cap);
  return out;
}

/// Horizontal distance to the ribbon of the start point of every step after
/// the first north step. At height y the ribbon boundary sits at column
/// sum_{t<=y}(s_t - 1); the top row uses the same bound, which is the extra
/// box above the ribbon's last cell.
inline std::vector<long> ribbon_distance_labels(const DyckPath& d) {
  if (d.is_identity())
    throw std::invalid_argument("the identity path has no decomposition");
  const std::string w = path_word(d);
  const auto bound = prefix_sums(minus_one(d.signature()), d.north_steps());
  std::vector<long> labels;
  long x = 0;
  std::size_t y = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    labels.push_back(bound[y - 1] - x);
    if (w[i] == 'N')
      ++y;
    else
      ++x;
  }
  return labels;
}

struct PathDecomposition {
  int arity;
  std::vector<DyckPath> parts;
};

/// D = N D_1 ... D_k: drop the first north step and cut the rest at the first
/// occurrences of distance labels k-1, k-2, ..., 0.
inline PathDecomposition catalan_decompose_path(const DyckPath& d) {
  const auto labels = ribbon_distance_labels(d);
  const int k = d.signature()[0];
  const std::string w = path_word(d);
  std::vector<std::size_t> cuts;
  std::size_t from = 0;
  for (int want = k - 1; want >= 0; --want) {
    while (from < labels.size() && labels[from] != want) ++from;
    if (from == labels.size())
      throw std::logic_error("distance label sequence is missing a cut");
    cuts.push_back(from);
  }
  cuts.push_back(labels.size());

  // row of every north step in the tail word, so each part can read its
  // signature from the rows its north steps occupy
  PathDecomposition out{k, {}};
  std::size_t row = 1;
  for (int j = 0; j < k; ++j) {
    const std::string_view part =
        std::string_view(w).substr(1 + cuts[j], cuts[j + 1] - cuts[j]);
    std::vector<int> sig;
    for (char c : part)
      if (c == 'N') sig.push_back(d.signature()[row++]);
    out.parts.push_back(path_from_word(Composition(std::move(sig)), part));
  }
  return out;
}

/// [D_1, ..., D_k] = N D_1 D_2 ... D_k.
inline DyckPath compose_paths(int k, std::span<const DyckPath> parts) {
  if (k < 1 || parts.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("compose_paths needs exactly k parts");
  std::string w = "N";
  Composition s{k};
  for (const auto& p : parts) {
    w += path_word(p);
    s = concat(s, p.signature());
  }
  return path_from_word(s, w);
}

/// Substitutes the parts for the final east run of D: the prefix of D through
/// its last north step followed by D_0 D_1 ... D_k, where k = mu(last).
inline DyckPath operadic_path_compose(const DyckPath& d,
                                      std::span<const DyckPath> parts) {
  if (d.is_identity())
    throw std::invalid_argument("operadic composition needs a north step");
  const int k = d.mu()[d.north_steps() - 1];
  if (parts.size() != static_cast<std::size_t>(k) + 1)
    throw std::invalid_argument(
        "operadic composition needs last mu entry + 1 parts");
  const std::string dw = path_word(d);
  std::string w = dw.substr(0, dw.rfind('N') + 1);
  Composition s = d.signature();
  for (const auto& p : parts) {
    w += path_word(p);
    s = concat(s, p.signature());
  }
  return path_from_word(s, w);
}

// text forms: "s=3,4,4,2,5; mu=0,2,6,0,5" or an NE word given alongside s
inline std::string to_string(const DyckPath& d) {
  return "s=" + to_string(d.signature()) + "; mu=" + to_string(d.mu());
}

inline DyckPath parse_path(std::string_view text,
                           const Composition* s_hint = nullptr) {
  std::string t(text);
  std::erase(t, ' ');
  if (t.rfind("s=", 0) == 0) {
    const auto semi = t.find(';');
    if (semi == std::string::npos || t.compare(semi + 1, 3, "mu=") != 0)
      throw std::invalid_argument("path text must be 's=...; mu=...'");
    return DyckPath(parse_composition(t.substr(2, semi - 2)),
                    parse_weak_composition(t.substr(semi + 4)));
  }
  const auto mu = mu_from_word(t);
  if (s_hint) return DyckPath(*s_hint, mu);
  if (mu.empty()) return identity_path();
  throw std::invalid_argument("an NE word needs its signature");
}

}  // namespace scat
