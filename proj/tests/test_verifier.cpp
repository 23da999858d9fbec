#include <gtest/gtest.h>

#include <cmath>

#include "opineq/error.hpp"
#include "opineq/verifier.hpp"

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

Instance fixed_instance(const SandwichBounds& bounds, HermitianMatrix a, HermitianMatrix b) {
  Instance inst;
  inst.n = a.dim();
  inst.A = std::move(a);
  inst.B = std::move(b);
  inst.bounds = bounds;
  return inst;
}

}  // namespace

TEST(CheckCase, AmGmOnScalars) {
  InequalityCase c{"amgm",
                   fixed_instance(SandwichBounds::common(1, 4), HermitianMatrix::scalar(2, 4.0), HermitianMatrix::identity(2)),
                   MapSpec::identity(2), CaseParams{0.5, 1.0, 1.0}};
  const auto v = check_case(c);
  EXPECT_NEAR(v.gap, 0.5, 1e-12);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.asserted);
  EXPECT_NEAR(v.relative_gap, v.gap / (1 + std::abs(v.rhs_norm)), 1e-15);
}

TEST(CheckCase, SquaredBracketHandValue) {
  InequalityCase c{"thm2.4-phi-inside",
                   fixed_instance(SandwichBounds::sandwich_b_low(1, 1.5, 2, 4), HermitianMatrix::scalar(3, 4.0),
                                  HermitianMatrix::identity(3)),
                   MapSpec::identity(3), CaseParams{0.5, 2.0, 1.0}};
  const auto v = check_case(c);
  EXPECT_NEAR(v.lhs_norm, 9.0, 1e-12);
  EXPECT_NEAR(v.rhs_norm, 625.0 / 64.0, 1e-12);
  EXPECT_NEAR(v.gap, 625.0 / 64.0 - 9.0, 1e-12);
  EXPECT_TRUE(v.holds);
}

TEST(CheckCase, RhsScaleMakesTightCaseFail) {
  InequalityCase c{"amgm",
                   fixed_instance(SandwichBounds::common(1, 4), HermitianMatrix::scalar(2, 4.0), HermitianMatrix::identity(2)),
                   MapSpec::identity(2), CaseParams{0.5, 1.0, 1.0}};
  CheckOptions opts;
  opts.rhs_scale = 0.5;
  EXPECT_FALSE(check_case(c, opts).holds);
}

TEST(Gate, RejectsBadParametersAndSpectra) {
  const auto bounds = SandwichBounds::sandwich_b_low(1, 1.5, 2, 4);
  InequalityCase c{"thm2.7-phi-inside", sample_instance(bounds, 3, 5, false), MapSpec::identity(3),
                   CaseParams{0.25, 1.0, 1.0}};
  EXPECT_TRUE(throws_code([&] { check_case(c); }, Errc::HypothesisNotMet));
  c.params.p = 2.0;
  EXPECT_NO_THROW(check_case(c));

  auto outside = c;
  outside.instance.A = HermitianMatrix::scalar(3, 5.0);
  EXPECT_TRUE(throws_code([&] { gate_case(outside); }, Errc::HypothesisNotMet));

  auto wrong_kind = c;
  wrong_kind.instance = sample_instance(SandwichBounds::common(1, 4), 3, 5, false);
  EXPECT_TRUE(throws_code([&] { gate_case(wrong_kind); }, Errc::HypothesisNotMet));

  auto wrong_dim = c;
  wrong_dim.phi = MapSpec::identity(2);
  EXPECT_TRUE(throws_code([&] { gate_case(wrong_dim); }, Errc::DimensionMismatch));

  auto unknown = c;
  unknown.ineq_id = "nosuch";
  EXPECT_TRUE(throws_code([&] { check_case(unknown); }, Errc::UnknownInequality));
}

TEST(CheckCase, RandomGatedCasesOfTrueEntriesHold) {
  SplitMix64 rng(2024);
  for (const auto& entry : registry()) {
    if (!entry.asserted || entry.id == "thm3.4") continue;
    for (int t = 0; t < 10; ++t) {
      const auto bounds = draw_bounds(entry.hypothesis, rng);
      CaseParams params{0.1 * static_cast<double>(rng.below(11)), 1.0, 1.0 + 0.25 * static_cast<double>(rng.below(5))};
      params = effective_params(entry, params);
      const auto ps = default_p_values(entry, params.alpha);
      if (!ps.empty()) params.p = ps[rng.below(ps.size())];
      const Index n = 2 + static_cast<Index>(rng.below(3));
      const auto kind = map_catalog()[rng.below(map_catalog().size())];
      InequalityCase c{entry.id, sample_instance(bounds, n, rng.next(), t % 2 == 1), random_map(n, kind, rng.next()),
                       params};
      const auto v = check_case(c);
      EXPECT_TRUE(v.holds) << entry.id << " trial " << t << " relative gap " << v.relative_gap;
    }
  }
}

TEST(ScalarLemma, Examples) {
  for (double nu : {0.0, 0.1, 0.25, 0.5, 0.9, 1.0}) EXPECT_NEAR(scalar_lemma_gap(1.0, nu), 0.0, 1e-15);
  for (double nu : {0.0, 1.0}) EXPECT_NEAR(scalar_lemma_gap(3.0, nu), 0.0, 1e-14);
  EXPECT_NEAR(scalar_lemma_gap(4.0, 0.5), 0.0, 1e-14);
  EXPECT_NEAR(scalar_lemma_gap(4.0, 0.25), 0.0, 1e-14);
  EXPECT_NEAR(scalar_lemma_gap(4.0, 0.75), 0.0, 1e-14);
  EXPECT_NEAR(scalar_lemma_gap(4.0, 0.375), 1.75 - std::sqrt(3.0), 1e-14);
  EXPECT_TRUE(throws_code([] { scalar_lemma_gap(0.0, 0.5); }, Errc::NonPositiveArgument));
  EXPECT_TRUE(throws_code([] { scalar_lemma_gap(-1.0, 0.5); }, Errc::NonPositiveArgument));
}

TEST(ScalarLemma, NonnegativeOnGrid) {
  for (int i = 0; i <= 400; ++i) {
    const double x = std::exp(-5.0 + 10.0 * i / 400.0);
    for (int j = 0; j <= 20; ++j) EXPECT_GE(scalar_lemma_gap(x, j / 20.0), -1e-12) << x << " " << j;
  }
}

TEST(ScalarFCheck, Examples) {
  const auto r = scalar_F_check(1, 4, 0.5, 1001);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.mu0, 1.5, 1e-14);
  EXPECT_NEAR(r.max_value, 1.5, 1e-9);
  EXPECT_TRUE(scalar_F_check(2, 3, 0.3, 101).pass);
  EXPECT_TRUE(throws_code([] { scalar_F_check(1, 4, 0.5, 2); }, Errc::ConfigInvalid));
  EXPECT_TRUE(throws_code([] { scalar_F_check(1, 4, 0.0, 11); }, Errc::WeightOutOfRange));
}

TEST(CompareConstants, Examples) {
  const auto sandwich = SandwichBounds::sandwich_b_low(1, 1.5, 2, 4);
  EXPECT_NEAR(compare_constants("thm2.7", "thm1.1", sandwich, CaseParams{0.5, 2.0, 1.0}), 1.0, 1e-15);
  EXPECT_NEAR(compare_constants("thm2.7", "thm1.1", sandwich, CaseParams{0.25, 2.0, 1.0}),
              1.0 / kantorovich(std::sqrt(4.0 / 3.0)), 1e-14);
  EXPECT_NEAR(compare_constants("thm2.7", "thm1.1", sandwich, CaseParams{0.25, 2.0, 1.0}), 0.9948452, 1e-7);
  EXPECT_NEAR(compare_constants("thm3.4", "seo", SandwichBounds::reverse_ando(1, 1, 2, 2), CaseParams{0.5, 1.0, 1.0}),
              0.8, 1e-12);
  EXPECT_TRUE(throws_code([&] { compare_constants("lee", "lin", sandwich, CaseParams{}); }, Errc::IncompatibleEntries));
  EXPECT_TRUE(throws_code([&] { compare_constants("nosuch", "lin", sandwich, CaseParams{}); }, Errc::UnknownInequality));
}

TEST(CaseJson, RoundTripReproducesVerdict) {
  const auto bounds = SandwichBounds::sandwich_a_low(0.7, 1.1, 2.5, 6.0);
  InequalityCase c{"thm1.3-phi-outside", sample_instance(bounds, 4, 31, true), random_map(4, MapKind::Compression, 8),
                   CaseParams{0.3, 2.0, 1.0}};
  const auto back = case_from_json(Json::parse(to_json(c).dump()));
  EXPECT_EQ(back.ineq_id, c.ineq_id);
  EXPECT_EQ(back.instance.A.matrix(), c.instance.A.matrix());
  EXPECT_EQ(back.phi.output_dim(), c.phi.output_dim());
  const auto v1 = check_case(c);
  const auto v2 = check_case(back);
  EXPECT_EQ(v1.gap, v2.gap);
  EXPECT_EQ(v1.holds, v2.holds);
  const auto p = params_from_json(to_json(CaseParams{0.1, 3.5, 1.25}));
  EXPECT_EQ(p.nu, 0.1);
  EXPECT_EQ(p.p, 3.5);
  EXPECT_EQ(p.alpha, 1.25);
  EXPECT_TRUE(throws_code([] { case_from_json(Json::parse(R"({"ineq_id": 3})")); }, Errc::ParseError));
}
