#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = opineq::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("opineq_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, UsageErrorsExitTwo) {
  const auto unknown = run({"verify", "--ineq", "nosuch", "--out", path("r.json")});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--trials", "abc"}).code, 2);
  EXPECT_EQ(run({"compare", "--a", "lee", "--b", "lin"}).code, 2);
  EXPECT_EQ(run({"replay", path("missing.json")}).code, 2);
}

TEST_F(CliTest, HelpListsEveryId) {
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  for (const char* id : {"amgm", "thm3.4", "scalar-lemma", "thm2.9-proof-phi-inside", "lee-printed", "norm-refinement"})
    EXPECT_NE(help.out.find(id), std::string::npos) << id;
}

TEST_F(CliTest, CompareConstants) {
  const auto r = run({"compare", "--a", "thm3.4", "--b", "seo", "--m", "1", "--M", "4", "--nu", "0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.8\n");
  const auto s = run({"compare", "--a", "thm2.7", "--b", "thm1.1", "--m", "1", "--mp", "1.5", "--Mp", "2", "--M", "4",
                      "--nu", "0.25", "--p", "2"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NEAR(std::stod(s.out), 0.9948452, 1e-7);
}

TEST_F(CliTest, VerifyIsDeterministicAcrossThreads) {
  const std::vector<std::string> base{"verify", "--ineq", "amgm,thm2.4-phi-outside,seo", "--n", "2,3", "--trials", "8",
                                      "--seed", "3"};
  auto a = base, b = base;
  a.insert(a.end(), {"--threads", "1", "--out", path("a.json")});
  b.insert(b.end(), {"--threads", "4", "--out", path("b.json")});
  EXPECT_EQ(run(a).code, 0);
  EXPECT_EQ(run(b).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_FALSE(slurp(path("a.json")).empty());
}

TEST_F(CliTest, CsvToStdout) {
  const auto r = run({"verify", "--ineq", "amgm", "--n", "2", "--trials", "3", "--format", "csv", "--out", "-"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("id,seed,n,nu,p,alpha,map,gap,relative_gap,holds\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
}

TEST_F(CliTest, AssertedFailureExitsOneAndReplays) {
  const auto r = run({"verify", "--ineq", "thm3.4", "--n", "2", "--trials", "40", "--seed", "42", "--force-endpoints",
                      "--out", path("r.json")});
  EXPECT_EQ(r.code, 1);
  const auto replay = run({"replay", path("r.json")});
  EXPECT_EQ(replay.code, 1);
  EXPECT_NE(replay.out.find("FAIL thm3.4"), std::string::npos);
}

TEST_F(CliTest, InformationalFailuresDoNotFailTheRun) {
  const auto r = run({"verify", "--ineq", "thm3.3-h", "--n", "2", "--trials", "40", "--force-endpoints", "--out",
                      path("r.json")});
  EXPECT_EQ(r.code, 0);
}

TEST_F(CliTest, GenEmitsReproducibleInstances) {
  const auto a = run({"gen", "--kind", "sandwich_B_low", "--n", "3", "--seed", "9", "--force-endpoints"});
  const auto b = run({"gen", "--kind", "sandwich_B_low", "--n", "3", "--seed", "9", "--force-endpoints"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("sandwich_B_low"), std::string::npos);
  EXPECT_EQ(run({"gen", "--kind", "banana"}).code, 2);
}

TEST_F(CliTest, SearchConfirmsKnownViolation) {
  const auto r = run({"search", "--ineq", "thm3.4", "--budget", "500", "--seed", "1", "--out", path("s.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violation confirmed"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("s.json")));
  EXPECT_EQ(run({"search", "--ineq", "amgm", "--budget", "200"}).code, 0);
}

TEST_F(CliTest, DefaultReportPaths) {
  const auto cwd = fs::current_path();
  fs::current_path(dir_);
  const auto verify = run({"verify", "--ineq", "amgm", "--n", "2", "--trials", "2"});
  const auto gen = run({"gen", "--kind", "common"});
  fs::current_path(cwd);
  EXPECT_EQ(verify.code, 0);
  EXPECT_TRUE(fs::exists(dir_ / "opineq-report.json"));
  EXPECT_FALSE(fs::exists(dir_ / "opineq-selftest.json"));
  EXPECT_NE(gen.out.find("\"kind\": \"common\""), std::string::npos);
}
