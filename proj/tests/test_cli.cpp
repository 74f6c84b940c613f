#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "gcl/cli.hpp"

namespace {

using nlohmann::json;

struct Proc {
  std::string out;
  int code;
};

// Runs the installed binary; stderr is folded into the captured text.
Proc run_binary(const std::string& args) {
  const std::string cmd = std::string(CLIFFORD_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int st = pclose(pipe);
  return {out, WIFEXITED(st) ? WEXITSTATUS(st) : -1};
}

gcl::cli::CommandResult run(std::vector<std::string> args) { return gcl::cli::run(std::move(args)); }

}  // namespace

TEST(CliBinary, ZaunerOrderIsThree) {
  const Proc p = run_binary("order --d 7 --F 0,-1,1,-1");
  ASSERT_EQ(p.code, 0) << p.out;
  const json j = json::parse(p.out);
  EXPECT_EQ(j["order"], 3);
  EXPECT_EQ(j["type"], 1);
  EXPECT_EQ(j["det"], 1);
}

TEST(CliBinary, VerifyAllAtThreePasses) {
  const Proc p = run_binary("verify --d 3 --suite all");
  ASSERT_EQ(p.code, 0) << p.out;
  const json j = json::parse(p.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["suites"].size(), gcl::suite_names().size());
}

TEST(CliBinary, EvenDimensionIsUsageError) {
  const Proc p = run_binary("op --d 2 --F 1,0,0,1");
  EXPECT_EQ(p.code, 2);
  EXPECT_TRUE(json::parse(p.out).contains("error"));
}

TEST(CliBinary, ErrorsExitTwo) {
  for (const char* args : {"op --d 5 --F 2,0,0,1", "op --d 6 --F 1,0,0,1", "order --d 5 --F 1,0", "frobnicate", "field --d 5 --bogus",
                           "verify --d 3 --suite nonsense", "label --d 5 --r 24", "roots --d 5 --F 1,0,0,1 --s 0", "field"})
    EXPECT_EQ(run_binary(args).code, 2) << args;
}

TEST(CliBinary, RepeatRunsAreByteIdentical) {
  for (const char* args : {"op --d 7 --F 0,-1,1,-1", "mub --d 5 --cycle-class", "sic --d 7", "verify --d 5 --suite perm", "field --d 9"}) {
    const Proc a = run_binary(args), b = run_binary(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(CliBinary, PrettyFormatAfterSubcommand) {
  const Proc p = run_binary("field --d 9 --format pretty");
  ASSERT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("\n  "), std::string::npos);
  EXPECT_EQ(json::parse(p.out), json::parse(run_binary("field --d 9").out));
}

TEST(CliRun, Field) {
  const auto r = run({"field", "--d", "9"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["p"], 3);
  EXPECT_EQ(r.payload["n"], 2);
  EXPECT_EQ(r.payload["modulus"], json::parse("[2,2,1]"));
  EXPECT_EQ(r.payload["theta"], 3);
  EXPECT_EQ(r.payload["theta_order"], 8);
}

TEST(CliRun, ConwayTableOverride) {
  const std::string path = ::testing::TempDir() + "gcl_cli_table.txt";
  std::ofstream(path) << "3 2 2,1,1\n";
  const auto r = run({"field", "--d", "9", "--conway-table", path});
  ASSERT_EQ(r.exit_code, 0) << r.text();
  EXPECT_EQ(r.payload["modulus"], json::parse("[2,1,1]"));
}

TEST(CliRun, OperatorEntriesAndTrace) {
  const auto r = run({"op", "--d", "7", "--F", "0,-1,1,-1"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["entries"].size(), 7u);
  EXPECT_EQ(r.payload["entries"][0].size(), 7u);
  EXPECT_TRUE(r.payload.contains("trace"));
  EXPECT_TRUE(r.payload.contains("weyl"));
  // Weyl coefficients of an element with no fixed direction: all d^2 points appear.
  const auto id = run({"op", "--d", "3", "--F", "1,0,0,1"});
  ASSERT_EQ(id.exit_code, 0);
  EXPECT_EQ(id.payload["weyl"].size(), 1u);
}

TEST(CliRun, OrderOfAntiSymplectic) {
  const auto r = run({"order", "--d", "3", "--F", "0,1,1,1"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["det"], -1);
  EXPECT_EQ(r.payload["order"], 8);
}

TEST(CliRun, RootsAndEigs) {
  const auto r = run({"roots", "--d", "5", "--F", "1,1,0,1", "--s", "2"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["roots"].size(), 2u);
  const auto e = run({"eigs", "--d", "5", "--F", "0,-1,1,-1"});
  ASSERT_EQ(e.exit_code, 0);
  EXPECT_EQ(e.payload["order"], 3);
  EXPECT_EQ(e.payload["dims"], json::parse("[1,2,2]"));
}

TEST(CliRun, Sic) {
  const auto r = run({"sic", "--d", "11"});
  ASSERT_EQ(r.exit_code, 0) << r.text();
  EXPECT_EQ(r.payload["d"], 11);
  const auto t = run({"sic", "--table3"});
  ASSERT_EQ(t.exit_code, 0);
  for (const auto& e : t.payload["entries"]) EXPECT_TRUE(e["pass"].get<bool>()) << e.dump();
  EXPECT_EQ(run({"sic", "--d", "9"}).exit_code, 2);
}

TEST(CliRun, Mub) {
  const auto t = run({"mub", "--d", "3", "--table"});
  ASSERT_EQ(t.exit_code, 0);
  EXPECT_EQ(t.payload["bases"].size(), 4u);
  const auto c = run({"mub", "--d", "7", "--cycle-class"});
  ASSERT_EQ(c.exit_code, 0);
  EXPECT_EQ(c.payload["disagreements"], 0);
  EXPECT_EQ(c.payload["cycling"], 168);
  const auto a = run({"mub", "--d", "7", "--act", "0,1,1,1"});
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.payload["action"].size(), 8u * 7u);
  EXPECT_EQ(run({"mub", "--d", "7"}).exit_code, 2);
}

TEST(CliRun, Label) {
  const auto r = run({"label", "--d", "7", "--r", "12"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["s"], 4);
  EXPECT_EQ(r.payload["t"], 1);
  const auto& ext = gcl::QuadraticExtension::of(gcl::make_field_of_size(7));
  const auto u = gcl::u_r(ext, 12);
  EXPECT_EQ(r.payload["u"], json::array({u.u1.code(), u.u2.code()}));
  EXPECT_EQ(r.payload["x"], ext.ext().exp(-12).code());
}

TEST(CliRun, VerifySuitesAtFive) {
  for (const auto& name : gcl::suite_names()) {
    const auto r = run({"verify", "--d", "5", "--suite", name, "--samples", "200", "--seed", "7"});
    EXPECT_EQ(r.exit_code, 0) << name << " " << r.text();
    EXPECT_EQ(r.text().find('.'), std::string::npos) << "floats in exact verify output";
  }
}
