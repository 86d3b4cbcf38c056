#pragma once

// Uniform access to every family by name: canonical listings, text forms
// and conversions routed through trees.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scat/bijections.hpp"
#include "scat/noncrossing.hpp"
#include "scat/parking.hpp"
#include "scat/paths.hpp"
#include "scat/polygons_words.hpp"
#include "scat/stirling.hpp"
#include "scat/trees.hpp"

namespace scat {

enum class Family {
  tree,
  path,
  stirling312,
  ncpartition,
  matching,
  angulation,
  parens,
  parking,
  decorated_tree,
  decorated_path,
};

inline constexpr Family catalan_families[] = {
    Family::tree,        Family::path,     Family::stirling312,
    Family::ncpartition, Family::matching, Family::angulation,
    Family::parens};

inline constexpr Family parking_families[] = {
    Family::parking, Family::decorated_tree, Family::decorated_path};

inline std::string to_string(Family f) {
  switch (f) {
    case Family::tree: return "tree";
    case Family::path: return "path";
    case Family::stirling312: return "stirling312";
    case Family::ncpartition: return "ncpartition";
    case Family::matching: return "matching";
    case Family::angulation: return "angulation";
    case Family::parens: return "parens";
    case Family::parking: return "parking";
    case Family::decorated_tree: return "decorated-tree";
    case Family::decorated_path: return "decorated-path";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (auto f : catalan_families)
    if (to_string(f) == name) return f;
  for (auto f : parking_families)
    if (to_string(f) == name) return f;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

inline bool is_parking_family(Family f) {
  return f == Family::parking || f == Family::decorated_tree ||
         f == Family::decorated_path;
}

/// Families whose objects exist only when every s(i) >= 2.
inline bool needs_entries_at_least_two(Family f) {
  return f == Family::stirling312 || f == Family::ncpartition ||
         f == Family::angulation;
}

inline void require_family_proviso(Family f, const Composition& s) {
  if (needs_entries_at_least_two(f) && !s.all_at_least(2))
    throw std::invalid_argument("family " + to_string(f) +
                                " needs every signature entry >= 2");
}

/// Text form of the image of t in a Catalan family.
inline std::string tree_to_family_text(Family f, const PlanarTree& t) {
  switch (f) {
    case Family::tree: return to_string(t);
    case Family::path: return to_string(tree_to_path(t));
    case Family::stirling312: return to_string(tree_to_stirling(t));
    case Family::ncpartition: return to_string(tree_to_partition(t));
    case Family::matching: return to_string(tree_to_matching(t));
    case Family::angulation: return to_string(tree_to_angulation(t));
    case Family::parens: return tree_to_parenthesization(t);
    default: break;
  }
  throw std::invalid_argument("family " + to_string(f) +
                              " is not in bijection with s-trees");
}

/// Reads an object of a Catalan family and returns its tree. The signature
/// is only needed where the text does not determine it (NE words and
/// noncrossing partitions).
inline PlanarTree family_text_to_tree(Family f, std::string_view text,
                                      const std::optional<Composition>& s) {
  switch (f) {
    case Family::tree: return parse_tree(text);
    case Family::path:
      return path_to_tree(parse_path(text, s ? &*s : nullptr));
    case Family::stirling312: {
      const auto sigma = parse_multipermutation(text);
      if (s && plus_one(sigma.content()) != *s)
        throw std::invalid_argument("permutation content must be s - 1");
      return stirling_to_tree(sigma);
    }
    case Family::ncpartition:
      if (!s) throw std::invalid_argument("a partition needs its signature");
      return partition_to_tree(parse_set_partition(text), *s);
    case Family::matching: {
      const auto pi = parse_set_partition(text);
      return matching_to_tree(s ? Matching(pi, *s) : Matching(pi));
    }
    case Family::angulation: {
      const auto t = angulation_to_tree(parse_angulation(text));
      require_all_at_least_two(signature(t), "the angulation bijection");
      return t;
    }
    case Family::parens: return parenthesization_to_tree(text);
    default: break;
  }
  throw std::invalid_argument("family " + to_string(f) +
                              " is not in bijection with s-trees");
}

// ---------------------------------------------------------------------------
// parking families share decorated trees as their hub

inline std::vector<int> parse_labels_suffix(std::string& text) {
  const auto at = text.find("labels=");
  if (at == std::string::npos)
    throw std::invalid_argument("decorated object needs '; labels=...'");
  auto labels = parse_int_list(text.substr(at + 7));
  auto cut = text.rfind(';', at);
  text.erase(cut == std::string::npos ? at : cut);
  return labels;
}

inline std::string decorated_tree_to_family_text(Family f,
                                                 const DecoratedTree& dt) {
  switch (f) {
    case Family::decorated_tree: return to_string(dt);
    case Family::decorated_path: return to_string(decorated_tree_to_path(dt));
    case Family::parking: return to_string(decorated_tree_to_parking(dt));
    default: break;
  }
  throw std::invalid_argument("family " + to_string(f) +
                              " is not a parking family");
}

inline DecoratedTree family_text_to_decorated_tree(
    Family f, std::string_view text, const std::optional<Composition>& s) {
  std::string t(text);
  switch (f) {
    case Family::decorated_tree: {
      auto labels = parse_labels_suffix(t);
      return DecoratedTree(parse_tree(t), std::move(labels));
    }
    case Family::decorated_path: {
      auto labels = parse_labels_suffix(t);
      return decorated_path_to_tree(
          DecoratedPath(parse_path(t, s ? &*s : nullptr), std::move(labels)));
    }
    case Family::parking: {
      if (!s) throw std::invalid_argument("a parking function needs its signature");
      const ParkingFunction pf(parse_int_list(t), minus_one(*s));
      return decorated_path_to_tree(parking_to_decorated_path(pf, *s));
    }
    default: break;
  }
  throw std::invalid_argument("family " + to_string(f) +
                              " is not a parking family");
}

/// Streams the family for signature s in canonical order: trees by the
/// lexicographic order of their east-step vectors, and for the parking
/// families each tree followed by its labelings in lexicographic order.
/// Line k of any two listings of the same group are images of each other.
inline std::size_t list_family(Family f, const Composition& s,
                               const std::function<void(const std::string&)>& emit,
                               std::size_t cap = default_enumeration_cap) {
  std::size_t n = 0;
  if (is_parking_family(f)) {
    std::size_t produced = 0;
    for_each_tree(
        s,
        [&](const PlanarTree& t) {
          detail::for_each_labeling<DecoratedTree>(
              s.length(),
              [&](const std::vector<int>& l) { return DecoratedTree(t, l); },
              [&](const DecoratedTree& dt) {
                if (++produced > cap) throw cap_exceeded(cap);
                emit(decorated_tree_to_family_text(f, dt));
                ++n;
              });
        },
        cap);
    return n;
  }
  require_family_proviso(f, s);
  for_each_tree(
      s,
      [&](const PlanarTree& t) {
        emit(tree_to_family_text(f, t));
        ++n;
      },
      cap);
  return n;
}

}  // namespace scat
