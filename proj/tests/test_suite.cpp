#include <gtest/gtest.h>

#include <algorithm>

#include "opineq/error.hpp"
#include "opineq/report.hpp"
#include "opineq/search.hpp"
#include "opineq/suite.hpp"

using namespace opineq;

namespace {

bool throws_code(auto&& fn, Errc code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

SuiteConfig small_config() {
  SuiteConfig config;
  config.ids = {"amgm", "thm1.1-phi-inside", "thm2.9-phi-outside", "seo", "norm-refinement"};
  config.dims = {2, 3};
  config.trials = 12;
  config.seed = 7;
  config.endpoints = EndpointMode::Alternate;
  return config;
}

}  // namespace

TEST(Suite, ZeroTrialsGiveEmptyReport) {
  auto config = small_config();
  config.trials = 0;
  const auto report = run_suite(config);
  EXPECT_TRUE(report.cases.empty());
  EXPECT_TRUE(report.asserted_ok());
  for (const auto& row : report.summary) EXPECT_EQ(row.trials, 0);
}

TEST(Suite, ConfigValidation) {
  auto config = small_config();
  config.trials = -1;
  EXPECT_TRUE(throws_code([&] { config.validate(); }, Errc::ConfigInvalid));
  config = small_config();
  config.dims = {0};
  EXPECT_TRUE(throws_code([&] { config.validate(); }, Errc::ConfigInvalid));
  config = small_config();
  config.nu_grid = {1.5};
  EXPECT_ANY_THROW(config.validate());
  config = small_config();
  config.ids = {"nosuch"};
  EXPECT_ANY_THROW(run_suite(config));
}

TEST(Suite, CasesAreSortedAndSummarized) {
  const auto config = small_config();
  const auto report = run_suite(config);
  ASSERT_EQ(report.cases.size(), config.ids.size() * config.dims.size() * static_cast<size_t>(config.trials));
  EXPECT_TRUE(std::is_sorted(report.cases.begin(), report.cases.end(), [](const auto& a, const auto& b) {
    return std::tie(a.id, a.n, a.trial) < std::tie(b.id, b.n, b.trial);
  }));
  ASSERT_EQ(report.summary.size(), config.ids.size());
  for (const auto& row : report.summary) {
    EXPECT_EQ(row.trials, 24);
    EXPECT_EQ(row.failures, 0) << row.id;
  }
  EXPECT_TRUE(report.asserted_ok());
}

TEST(Suite, PlanMatchesRecordedCase) {
  const auto config = small_config();
  const auto report = run_suite(config);
  const auto& rec = report.cases[5];
  const auto c = plan_case(config, find_entry(rec.id), rec.n, rec.trial);
  const auto v = check_case(c);
  EXPECT_EQ(v.gap, rec.gap);
  EXPECT_EQ(c.instance.seed, rec.seed);
}

TEST(Suite, DeterministicAcrossRunsAndThreadCounts) {
  auto config = small_config();
  config.threads = 1;
  const auto a = to_json(run_suite(config)).dump();
  const auto b = to_json(run_suite(config)).dump();
  config.threads = 3;
  const auto c = to_json(run_suite(config)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  config.seed = 8;
  EXPECT_NE(a, to_json(run_suite(config)).dump());
}

TEST(Suite, ShrunkRightHandSideIsCaught) {
  auto config = small_config();
  config.rhs_scale = 0.95;
  const auto report = run_suite(config);
  EXPECT_FALSE(report.asserted_ok());
  EXPECT_TRUE(std::any_of(report.summary.begin(), report.summary.end(), [](const auto& r) { return r.failures > 0; }));
  EXPECT_FALSE(report.failure_dumps.empty());
}

TEST(Suite, FixedBoundsPerHypothesis) {
  FixedBounds fixed;
  const auto common = fixed.for_hypothesis(HypothesisSet::Common);
  EXPECT_EQ(common.kind, BoundsKind::Common);
  EXPECT_EQ(common.M, 4.0);
  const auto sandwich = fixed.for_hypothesis(HypothesisSet::Sandwich);
  EXPECT_EQ(sandwich.kind, BoundsKind::SandwichBLow);
  EXPECT_EQ(sandwich.Mp, 2.0);
  const auto ando = fixed.for_hypothesis(HypothesisSet::ReverseAndo);
  EXPECT_EQ(ando.kind, BoundsKind::ReverseAndo);
  EXPECT_EQ(ando.m1, 1.0);
  EXPECT_EQ(ando.M2, 2.0);
}

TEST(Report, CsvAndJsonShape) {
  const auto report = run_suite(small_config());
  const auto csv = to_csv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "id,seed,n,nu,p,alpha,map,gap,relative_gap,holds");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(report.cases.size()) + 1);
  const auto doc = to_json(report);
  for (const char* key : {"config_hash", "config", "summary", "cases", "failures"}) EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(0.8), "0.8");
  EXPECT_EQ(hex64(255), "00000000000000ff");
}

TEST(Search, TightAtEqualityCases) {
  const auto amgm = tightness_search("amgm", 1000, 3);
  EXPECT_LT(amgm.best_gap, 1e-6);
  EXPECT_GE(amgm.best_gap, -1e-9);
  EXPECT_FALSE(amgm.violation_found);
  EXPECT_LE(amgm.evaluations, 1000);

  SearchOptions opts;
  opts.n = 1;
  opts.nu = 0.25;
  const auto lemma = tightness_search("scalar-lemma", 1000, 5, opts);
  EXPECT_NEAR(lemma.best_gap, 0.0, 1e-6);
  EXPECT_FALSE(lemma.violation_found);
}

TEST(Search, FindsNoViolationOfTrueEntry) {
  const auto rec = tightness_search("thm2.4-phi-inside", 5000, 1);
  EXPECT_GE(rec.best_relative_gap, -kVerdictTolerance);
  EXPECT_FALSE(rec.violation_confirmed);
  EXPECT_NO_THROW(check_case(rec.best_case));
}

TEST(Search, ReproducibleRecord) {
  const auto a = to_json(tightness_search("lin-sq-phi-outside", 300, 11)).dump();
  const auto b = to_json(tightness_search("lin-sq-phi-outside", 300, 11)).dump();
  EXPECT_EQ(a, b);
}
