#pragma once

// Command-line front end. run_cli parses arguments and writes to the given
// streams so the same code serves the binary and the tests.
//
// Exit codes: 0 ok, 1 property failure, 2 usage or parse error, 3 cap hit.

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scat/arw_compare.hpp"
#include "scat/bijections.hpp"
#include "scat/enumeration.hpp"
#include "scat/families.hpp"
#include "scat/parking.hpp"

namespace scat {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int property_failure = 1;
inline constexpr int usage = 2;
inline constexpr int cap = 3;
}  // namespace exit_code

enum class OutputFormat { text, jsonl };

struct CliConfig {
  std::size_t enumeration_cap = default_enumeration_cap;
  OutputFormat format = OutputFormat::text;
};

/// SCAT_CAP overrides the default cap; anything unparsable is a usage error.
inline std::size_t cap_from_environment() {
  const char* v = std::getenv("SCAT_CAP");
  if (!v || !*v) return default_enumeration_cap;
  std::size_t used = 0;
  const unsigned long long cap = std::stoull(v, &used);
  if (used != std::string_view(v).size() || cap == 0)
    throw std::invalid_argument("SCAT_CAP must be a positive integer");
  return static_cast<std::size_t>(cap);
}

// ---------------------------------------------------------------------------
// JSON forms

using nlohmann::json;

inline json blocks_json(const SetPartition& pi) { return pi.blocks(); }

inline json to_json(const PlanarTree& t) { return {{"degrees", t.degrees()}}; }
inline json to_json(const DyckPath& d) {
  return {{"s", d.signature().parts()}, {"mu", d.mu().parts()}};
}
inline json to_json(const Multipermutation& m) {
  return {{"word", m.word()}, {"content", m.content().parts()}};
}
inline json to_json(const SetPartition& pi) {
  return {{"blocks", blocks_json(pi)}};
}
inline json to_json(const Matching& m) {
  return {{"blocks", blocks_json(m.partition())}, {"s", m.signature().parts()}};
}
inline json to_json(const Angulation& a) {
  json diags = json::array();
  for (auto [i, j] : a.diagonals()) diags.push_back({i, j});
  return {{"n", a.polygon_size()}, {"diagonals", diags}};
}
inline json to_json(const ParkingFunction& pf) {
  return {{"prefs", pf.prefs()}, {"mu", pf.mu().parts()}};
}
inline json to_json(const DecoratedPath& dp) {
  json j = to_json(dp.path());
  j["labels"] = dp.labels();
  return j;
}
inline json to_json(const DecoratedTree& dt) {
  json j = to_json(dt.tree());
  j["labels"] = dt.labels();
  return j;
}

inline json tree_to_family_json(Family f, const PlanarTree& t) {
  switch (f) {
    case Family::tree: return to_json(t);
    case Family::path: return to_json(tree_to_path(t));
    case Family::stirling312: return to_json(tree_to_stirling(t));
    case Family::ncpartition: return to_json(tree_to_partition(t));
    case Family::matching: return to_json(tree_to_matching(t));
    case Family::angulation: return to_json(tree_to_angulation(t));
    case Family::parens: return {{"word", tree_to_parenthesization(t)}};
    default: break;
  }
  throw std::invalid_argument("family " + to_string(f) +
                              " is not in bijection with s-trees");
}

inline json decorated_tree_to_family_json(Family f, const DecoratedTree& dt) {
  switch (f) {
    case Family::decorated_tree: return to_json(dt);
    case Family::decorated_path: return to_json(decorated_tree_to_path(dt));
    case Family::parking: return to_json(decorated_tree_to_parking(dt));
    default: break;
  }
  throw std::invalid_argument("family " + to_string(f) +
                              " is not a parking family");
}

inline std::string big(const BigInt& v) { return v.str(); }

// ---------------------------------------------------------------------------
// verification over a range of signatures

struct SignatureReport {
  Composition s;
  BigInt count;
  std::vector<std::string> failures;
};

/// Runs every cross-family check available for s. Brute-force oracles are
/// used for the families that have them.
inline SignatureReport verify_signature(const Composition& s, std::size_t cap) {
  SignatureReport rep{s, count_recurrence(s), {}};
  auto fail = [&](const std::string& what) { rep.failures.push_back(what); };
  const BigInt& c = rep.count;

  if (count_determinant(s) != c) fail("determinant");
  const auto trees = enumerate_trees(s, cap);
  if (BigInt(trees.size()) != c) fail("tree count");
  if (std::set<PlanarTree>(trees.begin(), trees.end()).size() != trees.size())
    fail("trees distinct");

  const auto paths = enumerate_paths(s, cap);
  if (BigInt(paths.size()) != c) fail("path count");
  for (std::size_t k = 0; k < trees.size(); ++k) {
    const auto& t = trees[k];
    if (signature(t) != s) fail("tree signature");
    const auto d = tree_to_path(t);
    if (k < paths.size() && d != paths[k]) fail("path order");
    if (path_to_tree(d) != t) fail("path round trip");
    if (area_vector(d) != WeakComposition(internal_area_labels(t)))
      fail("area labels");
    if (!t.is_identity()) {
      const auto dec = catalan_decompose_path(d);
      if (compose_paths(dec.arity, dec.parts) != d) fail("path decomposition");
      const auto tdec = catalan_decompose_tree(t);
      if (join(tdec.children) != t) fail("tree decomposition");
    }
    const auto m = tree_to_matching(t);
    if (matching_to_tree(m) != t) fail("matching round trip");
    if (path_to_matching_direct(d) != m) fail("direct matching map");
    if (matching_to_path_direct(m) != d) fail("direct matching inverse");
    const auto w = tree_to_parenthesization(t);
    if (parenthesization_to_tree(w) != t) fail("parenthesization round trip");
    if (signature_of_parenthesization(w) != s) fail("parenthesization signature");
    if (peaks(d) != leftmost_leaf_count(t)) fail("peaks vs leftmost leaves");
  }
  if (BigInt(enumerate_matchings(s, cap).size()) != c) fail("matching count");

  if (s.all_at_least(2)) {
    const WeakComposition content = minus_one(s);
    const Composition cont(content.parts());
    const auto brute = enumerate_312_avoiding_filtered(cont, cap);
    const auto fast = enumerate_312_avoiding(cont, cap);
    if (BigInt(brute.size()) != c) fail("312-avoiding count");
    if (std::set<Multipermutation>(fast.begin(), fast.end()) !=
        std::set<Multipermutation>(brute.begin(), brute.end()))
      fail("312-avoiding sets");
    if (BigInt(enumerate_noncrossing_partitions(cont, cap).size()) != c)
      fail("noncrossing partition count");
    if (BigInt(enumerate_angulations_brute(s, cap).size()) != c)
      fail("angulation count");
    for (const auto& t : trees) {
      const auto d = tree_to_path(t);
      const auto sigma = tree_to_stirling(t);
      if (stirling_to_tree(sigma) != t) fail("Stirling round trip");
      if (path_to_stirling_direct(d) != sigma) fail("direct Stirling map");
      const auto pi = tree_to_partition(t);
      if (partition_to_tree(pi, s) != t) fail("partition round trip");
      if (path_to_partition_direct(d) != pi) fail("direct partition map");
      if (partition_to_path_direct(pi, s) != d) fail("direct partition inverse");
      const auto a = tree_to_angulation(t);
      if (angulation_to_tree(a) != t) fail("angulation round trip");
      if (signature_of_angulation(a) != s) fail("angulation signature");
    }
    NarayanaDistribution first{};
    for (auto st : all_narayana_statistics) {
      const auto dist = narayana_distribution(s, st, cap);
      if (dist.total() != c) fail("Narayana total " + to_string(st));
      if (st == NarayanaStatistic::peaks)
        first = dist;
      else if (dist.counts != first.counts)
        fail("Narayana " + to_string(st));
    }
  } else {
    const auto p = narayana_distribution(s, NarayanaStatistic::peaks, cap);
    const auto l =
        narayana_distribution(s, NarayanaStatistic::leftmost_leaves, cap);
    if (p.counts != l.counts) fail("Narayana leftmost-leaves");
  }

  if (s.length() <= 6) {
    const BigInt pf = count_parking(minus_one(s), cap);
    if (BigInt(enumerate_decorated_paths(s, cap).size()) != pf)
      fail("decorated path count");
    const auto dts = enumerate_decorated_trees(s, cap);
    if (BigInt(dts.size()) != pf) fail("decorated tree count");
    for (const auto& dt : dts)
      if (decorated_path_to_parking(decorated_tree_to_path(dt)) !=
          decorated_tree_to_parking(dt))
        fail("decoration transport");
  }
  std::sort(rep.failures.begin(), rep.failures.end());
  rep.failures.erase(std::unique(rep.failures.begin(), rep.failures.end()),
                     rep.failures.end());
  return rep;
}

// ---------------------------------------------------------------------------
// commands

inline int cmd_count(const Composition& s, bool all_methods,
                     const CliConfig& cfg, std::ostream& out) {
  const BigInt rec = count_recurrence(s);
  if (!all_methods) {
    if (cfg.format == OutputFormat::jsonl)
      out << json{{"s", s.parts()}, {"count", big(rec)}}.dump() << '\n';
    else
      out << rec << '\n';
    return exit_code::ok;
  }
  const BigInt det = count_determinant(s);
  BigInt exhaustive = 0;
  for_each_tree(s, [&](const PlanarTree&) { exhaustive += 1; },
                cfg.enumeration_cap);
  const bool agree = rec == det && det == exhaustive;
  if (cfg.format == OutputFormat::jsonl) {
    out << json{{"s", s.parts()},
                {"recurrence", big(rec)},
                {"determinant", big(det)},
                {"exhaustive", big(exhaustive)},
                {"agree", agree}}
               .dump()
        << '\n';
  } else {
    out << "recurrence " << rec << '\n'
        << "determinant " << det << '\n'
        << "exhaustive " << exhaustive << '\n'
        << "agree " << (agree ? "yes" : "no") << '\n';
  }
  return agree ? exit_code::ok : exit_code::property_failure;
}

inline int cmd_list(Family f, const Composition& s, const CliConfig& cfg,
                    std::ostream& out) {
  std::size_t n = 0;
  if (cfg.format == OutputFormat::text) {
    n = list_family(f, s, [&](const std::string& line) { out << line << '\n'; },
                    cfg.enumeration_cap);
    out << "count " << n << '\n';
    return exit_code::ok;
  }
  if (is_parking_family(f)) {
    for_each_tree(
        s,
        [&](const PlanarTree& t) {
          detail::for_each_labeling<DecoratedTree>(
              s.length(),
              [&](const std::vector<int>& l) { return DecoratedTree(t, l); },
              [&](const DecoratedTree& dt) {
                if (++n > cfg.enumeration_cap)
                  throw cap_exceeded(cfg.enumeration_cap);
                out << json{{"family", to_string(f)},
                            {"index", n - 1},
                            {"object", decorated_tree_to_family_json(f, dt)}}
                           .dump()
                    << '\n';
              });
        },
        cfg.enumeration_cap);
  } else {
    require_family_proviso(f, s);
    for_each_tree(
        s,
        [&](const PlanarTree& t) {
          out << json{{"family", to_string(f)},
                      {"index", n++},
                      {"object", tree_to_family_json(f, t)}}
                     .dump()
              << '\n';
        },
        cfg.enumeration_cap);
  }
  out << json{{"count", n}}.dump() << '\n';
  return exit_code::ok;
}

inline int cmd_convert(Family from, Family to, const std::string& object,
                       const std::optional<Composition>& s,
                       const CliConfig& cfg, std::ostream& out) {
  if (is_parking_family(from) != is_parking_family(to))
    throw std::invalid_argument("cannot convert between " + to_string(from) +
                                " and " + to_string(to));
  if (is_parking_family(from)) {
    const auto dt = family_text_to_decorated_tree(from, object, s);
    if (cfg.format == OutputFormat::jsonl)
      out << decorated_tree_to_family_json(to, dt).dump() << '\n';
    else
      out << decorated_tree_to_family_text(to, dt) << '\n';
    return exit_code::ok;
  }
  const auto t = family_text_to_tree(from, object, s);
  if (s && signature(t) != *s)
    throw std::invalid_argument("object signature differs from --s");
  if (cfg.format == OutputFormat::jsonl)
    out << tree_to_family_json(to, t).dump() << '\n';
  else
    out << tree_to_family_text(to, t) << '\n';
  return exit_code::ok;
}

inline int cmd_rational(long a, long b, const CliConfig& cfg,
                        std::ostream& out) {
  const auto s = rational_signature(a, b);
  if (cfg.format == OutputFormat::jsonl)
    out << json{{"a", a}, {"b", b}, {"s", s.parts()}}.dump() << '\n';
  else
    out << to_string(s) << '\n';
  return exit_code::ok;
}

inline int cmd_narayana(const Composition& s, const std::string& which,
                        const CliConfig& cfg, std::ostream& out) {
  std::vector<NarayanaStatistic> stats;
  if (which == "all") {
    for (auto st : all_narayana_statistics)
      if (narayana_statistic_applies(st, s)) stats.push_back(st);
  } else {
    stats.push_back(parse_narayana_statistic(which));
  }
  for (auto st : stats) {
    const auto dist = narayana_distribution(s, st, cfg.enumeration_cap);
    if (cfg.format == OutputFormat::jsonl) {
      json counts = json::object();
      for (const auto& [k, v] : dist.counts) counts[std::to_string(k)] = big(v);
      out << json{{"s", s.parts()}, {"statistic", to_string(st)}, {"counts", counts}}
                 .dump()
          << '\n';
    } else {
      out << to_string(st);
      for (const auto& [k, v] : dist.counts) out << ' ' << k << ':' << v;
      out << '\n';
    }
  }
  return exit_code::ok;
}

inline int cmd_parking(const std::string& action, const WeakComposition& mu,
                       const CliConfig& cfg, std::ostream& out) {
  if (action == "count") {
    const BigInt n = count_parking(mu, cfg.enumeration_cap);
    if (cfg.format == OutputFormat::jsonl)
      out << json{{"mu", mu.parts()}, {"count", big(n)}}.dump() << '\n';
    else
      out << n << '\n';
    return exit_code::ok;
  }
  if (action != "list")
    throw std::invalid_argument("parking action must be count or list");
  std::size_t n = 0;
  for_each_parking(
      mu,
      [&](const ParkingFunction& pf) {
        ++n;
        if (cfg.format == OutputFormat::jsonl)
          out << to_json(pf).dump() << '\n';
        else
          out << to_string(pf) << '\n';
      },
      cfg.enumeration_cap);
  if (cfg.format == OutputFormat::jsonl)
    out << json{{"count", n}}.dump() << '\n';
  else
    out << "count " << n << '\n';
  return exit_code::ok;
}

inline json arw_report(long a, long b, const DyckPath& d) {
  const auto cmp = compare_constructions(a, b, d);
  json j{{"a", a},
         {"b", b},
         {"mu", d.mu().parts()},
         {"arw", to_string(cmp.arw)},
         {"arw_sizes", mu_of(cmp.arw).parts()}};
  if (cmp.ours) {
    j["ours"] = to_string(*cmp.ours);
    j["ours_sizes"] = mu_of(*cmp.ours).parts();
    j["equal"] = cmp.equal;
  } else {
    j["ours"] = nullptr;
    j["equal"] = nullptr;
  }
  return j;
}

/// One JSON report per path; --all walks every (a,b)-path in canonical order.
inline int cmd_arw_compare(long a, long b, bool all,
                           const std::optional<WeakComposition>& mu,
                           const CliConfig& cfg, std::ostream& out) {
  const auto s = rational_signature(a, b);
  if (mu) {
    out << arw_report(a, b, DyckPath(s, *mu)).dump() << '\n';
    return exit_code::ok;
  }
  if (!all)
    throw std::invalid_argument("arw-compare needs --all or --mu");
  std::set<SetPartition> seen;
  std::size_t n = 0;
  std::size_t equal = 0;
  bool noncrossing = true;
  for_each_path(
      s,
      [&](const DyckPath& d) {
        const auto j = arw_report(a, b, d);
        const auto pi = laser_partition(d, a, b);
        noncrossing = noncrossing && is_noncrossing(pi);
        seen.insert(pi);
        ++n;
        if (j["equal"].is_boolean() && j["equal"].get<bool>()) ++equal;
        out << j.dump() << '\n';
      },
      cfg.enumeration_cap);
  out << json{{"paths", n},
              {"distinct_arw", seen.size()},
              {"injective", seen.size() == n},
              {"noncrossing", noncrossing},
              {"equal", equal}}
             .dump()
      << '\n';
  return exit_code::ok;
}

inline int cmd_verify(int max_weight, bool rational_only, const CliConfig& cfg,
                      std::ostream& out) {
  if (max_weight < 0) throw std::invalid_argument("verify needs a weight >= 0");
  std::vector<std::pair<Composition, std::optional<std::pair<long, long>>>> work;
  if (rational_only) {
    for (long a = 1; a <= max_weight; ++a)
      for (long b = 1; a + b <= max_weight + 1; ++b)
        if (std::gcd(a, b) == 1)
          work.emplace_back(rational_signature(a, b), std::make_pair(a, b));
  } else {
    for (const auto& s : compositions_up_to(max_weight))
      work.emplace_back(s, std::nullopt);
  }
  std::size_t failed = 0;
  for (const auto& [s, ab] : work) {
    SignatureReport rep{s, 0, {}};
    try {
      rep = verify_signature(s, cfg.enumeration_cap);
    } catch (const cap_exceeded&) {
      throw;
    } catch (const std::exception& e) {
      rep.failures.push_back(std::string("exception: ") + e.what());
    }
    if (ab && rep.count != rational_catalan(ab->first, ab->second))
      rep.failures.push_back("rational Catalan number");
    failed += !rep.failures.empty();
    if (cfg.format == OutputFormat::jsonl) {
      json j{{"s", s.parts()}, {"count", big(rep.count)},
             {"ok", rep.failures.empty()}, {"failures", rep.failures}};
      if (ab) j["ab"] = {ab->first, ab->second};
      out << j.dump() << '\n';
    } else {
      out << (s.empty() ? std::string("()") : to_string(s));
      if (ab) out << " (a,b)=(" << ab->first << ',' << ab->second << ')';
      out << "  C=" << rep.count << "  ";
      if (rep.failures.empty()) {
        out << "ok";
      } else {
        out << "FAIL";
        for (const auto& f : rep.failures) out << " [" << f << ']';
      }
      out << '\n';
    }
  }
  if (cfg.format == OutputFormat::jsonl)
    out << json{{"signatures", work.size()}, {"failed", failed}}.dump() << '\n';
  else
    out << "signatures " << work.size() << "  failed " << failed << '\n';
  return failed ? exit_code::property_failure : exit_code::ok;
}

// ---------------------------------------------------------------------------
// argument parsing

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"signature-indexed Catalan combinatorics", "scat"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "jsonl"}));

  std::string s_text;
  std::string family_text;
  std::string from_text;
  std::string to_text;
  std::string object_text;
  std::string stat_text = "all";
  std::string action_text;
  std::string mu_text;
  std::optional<std::string> s_opt;
  std::optional<std::string> mu_opt;
  bool all_methods = false;
  bool all_paths = false;
  bool rational_only = false;
  long a = 0;
  long b = 0;
  int weight = 0;

  auto* count = app.add_subcommand("count", "number of s-trees");
  count->add_option("s", s_text, "signature, e.g. 3,4,3")->required();
  count->add_flag("--all-methods", all_methods,
                  "compare recurrence, determinant and exhaustive count");

  auto* list = app.add_subcommand("list", "list a family in canonical order");
  list->add_option("family", family_text)->required();
  list->add_option("s", s_text)->required();

  auto* convert = app.add_subcommand("convert", "map an object to another family");
  convert->add_option("from", from_text)->required();
  convert->add_option("to", to_text)->required();
  convert->add_option("object", object_text)->required();
  convert->add_option("--s", s_opt, "signature, needed for NE words, partitions and parking functions");

  auto* rational = app.add_subcommand("rational", "signature of the (a,b) case");
  rational->add_option("a", a)->required();
  rational->add_option("b", b)->required();

  auto* narayana = app.add_subcommand("narayana", "Narayana distributions");
  narayana->add_option("s", s_text)->required();
  narayana->add_option("--statistic", stat_text, "statistic name or all");

  auto* parking = app.add_subcommand("parking", "mu-parking functions");
  parking->add_option("action", action_text)
      ->required()
      ->check(CLI::IsMember({"count", "list"}));
  parking->add_option("mu", mu_text)->required();

  auto* arw = app.add_subcommand("arw-compare", "laser partition versus cavern partition");
  arw->add_option("a", a)->required();
  arw->add_option("b", b)->required();
  auto* all_flag = arw->add_flag("--all", all_paths, "every (a,b)-path");
  arw->add_option("--mu", mu_opt, "east-step vector of one path")->excludes(all_flag);

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("N", weight, "largest |s|")->required();
  verify->add_flag("--rational-only", rational_only,
                   "only (a,b) signatures with a+b <= N+1");

  std::vector<const char*> argv{"scat"};
  for (const auto& x : args) argv.push_back(x.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    CliConfig cfg;
    cfg.enumeration_cap = cap_from_environment();
    cfg.format = format == "jsonl" ? OutputFormat::jsonl : OutputFormat::text;
    if (*count) return cmd_count(parse_composition(s_text), all_methods, cfg, out);
    if (*list)
      return cmd_list(parse_family(family_text), parse_composition(s_text), cfg, out);
    if (*convert) {
      std::optional<Composition> s;
      if (s_opt) s = parse_composition(*s_opt);
      return cmd_convert(parse_family(from_text), parse_family(to_text),
                         object_text, s, cfg, out);
    }
    if (*rational) return cmd_rational(a, b, cfg, out);
    if (*narayana) return cmd_narayana(parse_composition(s_text), stat_text, cfg, out);
    if (*parking)
      return cmd_parking(action_text, parse_weak_composition(mu_text), cfg, out);
    if (*arw) {
      std::optional<WeakComposition> mu;
      if (mu_opt) mu = parse_weak_composition(*mu_opt);
      return cmd_arw_compare(a, b, all_paths, mu, cfg, out);
    }
    if (*verify) return cmd_verify(weight, rational_only, cfg, out);
  } catch (const cap_exceeded& e) {
    err << "scat: " << e.what() << " (raise SCAT_CAP to allow more)\n";
    return exit_code::cap;
  } catch (const std::exception& e) {
    err << "scat: " << e.what() << '\n';
    return exit_code::usage;
  }
  return exit_code::usage;
}

}  // namespace scat
