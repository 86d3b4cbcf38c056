#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "scat/commands.hpp"

using namespace scat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "3,4,3"}).out, "15\n");
  EXPECT_EQ(run({"count", ""}).out, "1\n");
  const auto r = run({"count", "3,4,3", "--all-methods"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "recurrence 15\ndeterminant 15\nexhaustive 15\nagree yes\n");
  const auto j = nlohmann::json::parse(run({"--format", "jsonl", "count", "2,2,2,2"}).out);
  EXPECT_EQ(j["count"], "14");
}

TEST(Cli, ListStirling) {
  const auto r = run({"list", "stirling312", "3,4,3"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 16u);
  EXPECT_EQ(ls.back(), "count 15");
}

TEST(Cli, ListsAreAlignedAcrossFamilies) {
  const auto trees = lines(run({"list", "tree", "3,3,2"}).out);
  const auto paths = lines(run({"list", "path", "3,3,2"}).out);
  ASSERT_EQ(trees.size(), paths.size());
  for (std::size_t i = 0; i + 1 < trees.size(); ++i) {
    const auto r = run({"convert", "tree", "path", trees[i]});
    EXPECT_EQ(r.out, paths[i] + "\n");
  }
}

TEST(Cli, ConvertGoldens) {
  const std::string path = "s=3,4,4,2,5; mu=0,2,6,0,5";
  EXPECT_EQ(run({"convert", "path", "stirling312", path}).out, "2233321155554\n");
  EXPECT_EQ(run({"convert", "path", "ncpartition", path}).out,
            "1,2,6,7,8|3,4,5|9,10,11,12,13\n");
  EXPECT_EQ(run({"convert", "path", "parens", path}).out, "(**(****)*)*((*****)*)\n");
  EXPECT_EQ(run({"convert", "parens", "path", "(**(****)*)*((*****)*)"}).out, path + "\n");
  EXPECT_EQ(run({"convert", "ncpartition", "matching", "1,2,6,7,8|3,4,5|9,10,11,12,13",
                 "--s", "3,4,4,2,5"}).out,
            "1,10,11|2,3,4,9|5,6,7,8|12,18|13,14,15,16,17\n");
  EXPECT_EQ(run({"convert", "parking", "decorated-path", "0,4,0,5,4,0,3", "--s",
                 "2,2,2,2,2,2,2"}).out,
            "s=2,2,2,2,2,2,2; mu=0,0,3,1,0,1,2; labels=1,3,6,7,2,5,4\n");
}

TEST(Cli, RationalNarayanaParking) {
  EXPECT_EQ(run({"rational", "5", "8"}).out, "2,3,2,3,2\n");
  EXPECT_EQ(run({"narayana", "3,4,3", "--statistic", "peaks"}).out, "peaks 1:1 2:7 3:7\n");
  EXPECT_EQ(lines(run({"narayana", "3,4,3"}).out).size(), 5u);
  EXPECT_EQ(run({"parking", "count", "1,1,1"}).out, "16\n");
}

TEST(Cli, ArwCompare) {
  const auto r = run({"arw-compare", "5", "13", "--mu", "0,2,4,4,2"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["arw"], "1,2,5,6,9,10|3,4|7,8|11,12");
  EXPECT_EQ(j["ours"], "1,2,5,6,10|3,4|7,8,9|11,12");
  EXPECT_EQ(j["equal"], false);
  const auto all = lines(run({"arw-compare", "3", "5", "--all"}).out);
  const auto summary = nlohmann::json::parse(all.back());
  EXPECT_EQ(summary["paths"], 7);
  EXPECT_EQ(summary["injective"], true);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "6"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, exit_code::usage);
  EXPECT_EQ(run({"frobnicate"}).code, exit_code::usage);
  EXPECT_EQ(run({"count", "3,x"}).code, exit_code::usage);
  EXPECT_EQ(run({"list", "stirling312", "2,1"}).code, exit_code::usage);
  EXPECT_EQ(run({"rational", "4", "6"}).code, exit_code::usage);
  EXPECT_EQ(run({"--format", "xml", "count", "2"}).code, exit_code::usage);
  EXPECT_EQ(run({"convert", "tree", "parking", "[2,0,0]"}).code, exit_code::usage);
  EXPECT_EQ(run({"--help"}).code, exit_code::ok);
}

TEST(Cli, CapExceeded) {
  ::setenv("SCAT_CAP", "10", 1);
  const auto r = run({"list", "tree", "2,2,2,2"});
  ::unsetenv("SCAT_CAP");
  EXPECT_EQ(r.code, exit_code::cap);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> cmds{
      {"list", "matching", "2,3,2"},
      {"--format", "jsonl", "list", "decorated-tree", "2,2,2"},
      {"--format", "jsonl", "arw-compare", "4", "7", "--all"},
      {"narayana", "2,2,2,2,2"}};
  for (const auto& c : cmds) {
    const auto first = run(c);
    EXPECT_EQ(first.code, 0);
    EXPECT_EQ(run(c).out, first.out);
  }
}
