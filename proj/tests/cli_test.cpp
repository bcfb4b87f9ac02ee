#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "parikh/cli.hpp"

namespace parikh::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("parikh_cli_test_" + name);
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

nlohmann::json record(const std::string& line) { return nlohmann::json::parse(line); }

TEST(Cli, MatchFromFile) {
  auto f = temp_file("fig1.txt", "abcabdcb");
  auto r = invoke({"match", "--pattern", "bac", "--text-file", f.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, MatchNotFoundExitsOne) {
  auto r = invoke({"match", "--pattern", "xyz", "--text", "aaaa"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "");
}

TEST(Cli, MatchFromStdin) {
  auto r = invoke({"match", "--pattern", "ab"}, "xxba");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, QuietPrintsNothing) {
  auto r = invoke({"match", "--pattern", "ab", "--text", "ba", "--quiet"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
}

TEST(Cli, MfspWithStats) {
  auto r = invoke({"mfsp", "--pattern", "aabbc", "--text", "abacbbadc", "--stats"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "ell=0 r=4 length=5");
  EXPECT_NE(r.out.find("stats n=9 m=5 pushes=9 advances="), std::string::npos);
}

TEST(Cli, MfspSubstringFromFileAndStdin) {
  auto f = temp_file("mfsp.txt", "abacbbadc");
  auto a = invoke({"mfsp", "--pattern", "aabbc", "--text-file", f.string(), "--show-substring"});
  EXPECT_EQ(a.out, "ell=0 r=4 length=5\nsubstring=abacb\n");
  auto b = invoke({"mfsp", "--pattern", "aabbc", "--show-substring"}, "abacbbadc");
  EXPECT_EQ(b.out, a.out);
}

TEST(Cli, EnumerateAndPack) {
  auto e = invoke({"enumerate", "--pattern", "bac", "--text", "abcabdcb"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "0\n1\n2\n");
  auto none = invoke({"enumerate", "--pattern", "xy", "--text", "abcabdcb"});
  EXPECT_EQ(none.code, 0);
  EXPECT_EQ(none.out, "");
  auto p = invoke({"pack", "--pattern", "ab", "--text", "ababab"});
  EXPECT_EQ(p.out, "0\n2\n4\n");
}

TEST(Cli, RecordsAgreeWithText) {
  auto txt = invoke({"enumerate", "--pattern", "bac", "--text", "abcabdcb", "--stats"});
  auto rec = invoke(
      {"enumerate", "--pattern", "bac", "--text", "abcabdcb", "--stats", "--format", "records"});
  auto j = record(rec.out);
  EXPECT_EQ(j["command"], "enumerate");
  EXPECT_EQ(j["positions"], nlohmann::json({0, 1, 2}));
  EXPECT_EQ(j["n"], 8);
  EXPECT_EQ(j["m"], 3);
  EXPECT_EQ(j["stats"]["applies"], 13);
  EXPECT_NE(txt.out.find("stats n=8 m=3 count=3 applies=13"), std::string::npos);

  auto mf = record(invoke({"mfsp", "--pattern", "aabbc", "--text", "abacbbadc", "--stats",
                           "--format", "records"})
                       .out);
  EXPECT_EQ(mf["ell"], 0);
  EXPECT_EQ(mf["r"], 4);
  EXPECT_EQ(mf["length"], 5);
  EXPECT_EQ(mf["stats"]["pushes"], 9);

  auto pk = record(
      invoke({"pack", "--pattern", "bac", "--text", "abcabdcb", "--format", "records"}).out);
  EXPECT_EQ(pk["matches"], 3);
  EXPECT_EQ(pk["count"], 1);
  EXPECT_EQ(pk["starts"], nlohmann::json({0}));

  auto mt = record(
      invoke({"match", "--pattern", "xyz", "--text", "aaaa", "--format", "records"}).out);
  EXPECT_EQ(mt["found"], false);
  EXPECT_TRUE(mt["position"].is_null());
}

TEST(Cli, TokenMode) {
  auto r = invoke({"enumerate", "--mode", "tokens", "--pattern", "be to", "--text",
                   "to be or not to be"});
  EXPECT_EQ(r.out, "0\n4\n");
  auto s = invoke({"mfsp", "--mode", "tokens", "--pattern", "a b a", "--text", "x a b a y",
                   "--show-substring"});
  EXPECT_EQ(s.out, "ell=1 r=3 length=3\nsubstring=a b a\n");
}

TEST(Cli, OracleModeAgrees) {
  for (const char* cmd : {"match", "enumerate", "mfsp", "pack"}) {
    auto r = invoke({cmd, "--pattern", "aab", "--text", "abaabbaabab", "--oracle"});
    EXPECT_TRUE(r.code == 0 || r.code == 1) << cmd << ": " << r.err;
    EXPECT_EQ(r.err, "");
  }
}

TEST(Cli, EmptyPattern) {
  EXPECT_EQ(invoke({"match", "--pattern", "", "--text", "abc"}).out, "0\n");
  EXPECT_EQ(invoke({"enumerate", "--pattern", "", "--text", "ab"}).out, "0\n1\n2\n");
  EXPECT_EQ(invoke({"pack", "--pattern", "", "--text", "ab"}).out, "");
  EXPECT_EQ(invoke({"mfsp", "--pattern", "", "--text", "ab"}).out, "ell=0 r=-1 length=0\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"match", "--text", "abc"}).code, 2);  // no pattern
  EXPECT_EQ(invoke({"match", "--pattern", "a", "--mode", "utf9"}).code, 2);
  EXPECT_EQ(invoke({"match", "--pattern", "a", "--text", "a", "--text-file", "x"}).code, 2);
  auto missing = invoke({"match", "--pattern", "a", "--text-file", "/nonexistent/file"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);
  EXPECT_EQ(invoke({"gen", "--n", "4"}).code, 2);  // --m required
}

TEST(Cli, HelpExitsZero) {
  auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}

TEST(Cli, GenToFilesThenScan) {
  auto base = (std::filesystem::temp_directory_path() / "parikh_cli_test_gen").string();
  auto g = invoke({"gen", "--n", "1000", "--m", "8", "--sigma", "4", "--seed", "3", "--plant",
                   "10,500", "--out", base});
  ASSERT_EQ(g.code, 0) << g.err;
  auto r = invoke({"enumerate", "--pattern-file", base + ".pattern", "--text-file", base,
                   "--format", "records", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto positions = record(r.out)["positions"].get<std::vector<std::size_t>>();
  EXPECT_TRUE(std::binary_search(positions.begin(), positions.end(), 10u));
  EXPECT_TRUE(std::binary_search(positions.begin(), positions.end(), 500u));
}

TEST(Cli, GenToStdout) {
  auto a = invoke({"gen", "--n", "16", "--m", "4", "--sigma", "4", "--seed", "1"});
  EXPECT_EQ(a.out, "ccdb\nbddcbdbcbcbacdcd\n");
  auto t = invoke({"gen", "--n", "3", "--m", "1", "--sigma", "1000", "--mode", "tokens"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out.substr(0, 1), "s");
  EXPECT_EQ(invoke({"gen", "--n", "3", "--m", "1", "--sigma", "200"}).code, 2);
  EXPECT_EQ(invoke({"gen", "--n", "3", "--m", "1", "--sigma", "300", "--out", "/tmp/x"}).code, 2);
  EXPECT_EQ(invoke({"gen", "--n", "10", "--m", "3", "--plant", "0,1"}).code, 2);
}

TEST(Cli, BenchRecords) {
  auto r = invoke({"bench", "--sigma", "4", "--m", "16", "--n", "4000,8000", "--reps", "3",
                   "--format", "records"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int cells = 0, summaries = 0, scaling = 0;
  while (std::getline(lines, line)) {
    auto j = record(line);
    if (j["command"] == "bench") {
      ++cells;
      EXPECT_TRUE(j["counters_ok"].get<bool>());
    } else if (j["command"] == "bench-summary") {
      ++summaries;
    } else if (j["command"] == "bench-scaling") {
      ++scaling;
    }
  }
  EXPECT_EQ(cells, 2);
  EXPECT_EQ(summaries, 1);
  EXPECT_EQ(scaling, 1);
  EXPECT_EQ(invoke({"bench", "--n", "100", "--reps", "2"}).code, 2);
}

}  // namespace
}  // namespace parikh::cli
