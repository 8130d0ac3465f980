#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "toggle/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = toggle::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "toggle_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, PetersenNimber) {
  auto r = call({"nimber", "--family", "petersen", "--m", "6", "--k", "2", "--variant", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, OtherFamilies) {
  EXPECT_EQ(call({"nimber", "--family", "lattice2", "--m", "1"}).out, "1\n");
  EXPECT_EQ(call({"nimber", "--family", "path", "--m", "1"}).out, "1\n");
  EXPECT_EQ(call({"nimber", "--family", "cycle", "--m", "4", "--format", "json-lines"}).out.substr(0, 10),
            "{\"nimber\":");
  EXPECT_EQ(call({"nimber", "--family", "petersen", "--m", "6"}).code, 2);
  EXPECT_EQ(call({"nimber", "--family", "cycle", "--m", "4", "--variant", "01"}).code, 2);
}

TEST(Cli, VerifyFourEqual) {
  auto r = call({"verify", "--claim", "thm_four_equal", "--m-max", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds"), std::string::npos);
  EXPECT_NE(r.out.find("m=9"), std::string::npos);
}

TEST(Cli, VerifyJsonLinesOneRecordPerCase) {
  auto r = call({"verify", "--claim", "thm_3k_even", "--k", "2", "--format", "json-lines"});
  EXPECT_EQ(r.code, 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 2u);
  EXPECT_NE(r.out.find("\"status\":\"holds\""), std::string::npos);
}

TEST(Cli, ReducePipeline) {
  auto cnf = scratch("example.cnf"), tg = scratch("example.tg");
  write(cnf, "p cnf 3 1\n1 2 3 0\n");
  auto r = call({"reduce", "--cnf", cnf.string(), "--out", tg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("vertices 56"), std::string::npos);
  auto n = call({"nimber", "--graph", tg.string()});
  EXPECT_EQ(n.code, 0);
  EXPECT_GT(std::stoi(n.out), 0);
  auto q = call({"qbf-check", "--cnf", cnf.string()});
  EXPECT_EQ(q.code, 0);
  EXPECT_NE(q.out.find("qbf=1"), std::string::npos);
}

TEST(Cli, QbfSamplesReproducible) {
  std::vector<std::string> a{"verify", "--claim", "qbf_equivalence", "--samples", "6", "--seed", "3"};
  auto one = call(a);
  a.insert(a.begin(), {"--jobs", "4"});
  auto four = call(a);
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
}

TEST(Cli, Table) {
  auto r = call({"table", "--variant", "01", "--m-range", "5..6", "--k-range", "1..1", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "variant,m,k,nimber\n01,5,1,1\n01,6,1,0\n");
  EXPECT_EQ(call({"table", "--m-range", "6..5"}).code, 2);
}

TEST(Cli, OeisSnapshots) {
  EXPECT_EQ(call({"oeis-check", "--seq", "A071426", "--count", "101"}).code, 0);
  EXPECT_EQ(call({"oeis-check", "--seq", "A361517", "--count", "12"}).code, 0);
}

TEST(Cli, OeisMismatchIsExitOne) {
  auto b = scratch("bad.txt");
  write(b, "0 0\n1 1\n2 1\n3 1\n4 9\n");
  auto r = call({"oeis-check", "--seq", "A071426", "--bfile", b.string(), "--count", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("index 4"), std::string::npos);
  write(b, "0 0\n1 1\n3 1\n");
  EXPECT_EQ(call({"oeis-check", "--seq", "A071426", "--bfile", b.string()}).code, 2);
}

TEST(Cli, Replay) {
  auto g = scratch("p3.tg");
  write(g, "toggle-graph 1\nn 3\ne 0 1\ne 1 2\n");
  auto ok = call({"replay", "--graph", g.string(), "--moves", "1"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("stage 1 after 1: 000"), std::string::npos);
  EXPECT_EQ(call({"replay", "--graph", g.string(), "--moves", "1,0"}).code, 1);
  EXPECT_EQ(call({"replay", "--graph", g.string(), "--moves", "1,x"}).code, 2);
}

TEST(Cli, JacobsLadder) {
  EXPECT_EQ(call({"jl", "--m", "6"}).out, "0\n");
  EXPECT_EQ(call({"jl", "--m", "3"}).out, "1\n");
  EXPECT_EQ(call({"jl", "--m", "2"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  auto r = call({"nimber", "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(call({"verify", "--claim", "thm_unknown"}).code, 2);
  EXPECT_EQ(call({"nimber", "--graph", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, MemoLimitFromEnvironment) {
  setenv("TOGGLE_MEMO_LIMIT", "3", 1);
  auto r = call({"nimber", "--family", "petersen", "--m", "9", "--k", "2"});
  unsetenv("TOGGLE_MEMO_LIMIT");
  EXPECT_EQ(r.code, 3);
  setenv("TOGGLE_MEMO_LIMIT", "lots", 1);
  EXPECT_EQ(call({"jl", "--m", "5"}).code, 2);
  unsetenv("TOGGLE_MEMO_LIMIT");
}
