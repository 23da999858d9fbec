#include <gtest/gtest.h>

#include <cmath>

#include "opineq/error.hpp"
#include "opineq/linalg.hpp"
#include "opineq/matrix_io.hpp"
#include "opineq/sampler.hpp"
#include "test_util.hpp"

using namespace opineq;
using opineq::testing::max_abs_diff;
using opineq::testing::oracle_eigenvalues;
using opineq::testing::random_hermitian;
using opineq::testing::random_pd;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an opineq::Error";
  return Errc::ParseError;
}

}  // namespace

TEST(Eigh, DiagonalIsSortedWithPermutedBasis) {
  const auto d = eigh(HermitianMatrix::diagonal({3.0, 1.0}));
  EXPECT_DOUBLE_EQ(d.eigenvalues(0), 1.0);
  EXPECT_DOUBLE_EQ(d.eigenvalues(1), 3.0);
  EXPECT_NEAR(std::abs(d.eigenvectors(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(d.eigenvectors(0, 1)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(d.eigenvectors(0, 0)), 0.0, 1e-15);
}

TEST(Eigh, TwoByTwoByHand) {
  const auto d = eigh(HermitianMatrix::real({{2, 1}, {1, 2}}));
  EXPECT_NEAR(d.eigenvalues(0), 1.0, 1e-14);
  EXPECT_NEAR(d.eigenvalues(1), 3.0, 1e-14);
}

TEST(Eigh, IdentityReconstructs) {
  const auto i4 = HermitianMatrix::identity(4);
  const auto d = eigh(i4);
  for (Index k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(d.eigenvalues(k), 1.0);
  EXPECT_LE(relative_frobenius(d.reconstruct().matrix(), i4.matrix()), 1e-14);
}

TEST(Eigh, RejectsNonHermitian) {
  CMatrix bad(2, 2);
  bad << 1.0, 2.0, 0.0, 1.0;
  EXPECT_EQ(code_of([&] { HermitianMatrix{bad}; }), Errc::NonHermitianInput);
  EXPECT_EQ(code_of([&] { eigh(bad); }), Errc::NonHermitianInput);
  CMatrix imag_diag = CMatrix::Identity(2, 2);
  imag_diag(0, 0) = Complex(1.0, 1e-6);
  EXPECT_EQ(code_of([&] { HermitianMatrix{imag_diag}; }), Errc::NonHermitianInput);
}

TEST(Eigh, AgreesWithIndependentSolver) {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 1 + trial % 12;
    const auto a = random_hermitian(n, rng, 1.0 + trial);
    const auto d = eigh(a);
    const RVector expected = oracle_eigenvalues(a);
    const double scale = 1.0 + a.max_abs() * n;
    for (Index i = 0; i < n; ++i) EXPECT_NEAR(d.eigenvalues(i), expected(i), 1e-12 * scale);
    EXPECT_LE(relative_frobenius(d.reconstruct().matrix(), a.matrix()), 1e-10);
    EXPECT_LE(max_abs_diff(d.eigenvectors.adjoint() * d.eigenvectors, CMatrix::Identity(n, n)), 1e-10);
  }
}

TEST(Eigh, DegenerateSpectrumStillReconstructs) {
  const auto a = sample_constrained(6, 2.0, 2.0, 9, false) + HermitianMatrix::diagonal({0, 0, 0, 1, 1, 1});
  const auto d = eigh(a);
  EXPECT_LE(relative_frobenius(d.reconstruct().matrix(), a.matrix()), 1e-12);
}

TEST(MatrixPower, Examples) {
  EXPECT_LE(max_abs_diff(matrix_power(HermitianMatrix::identity(3), 0.5).matrix(), CMatrix::Identity(3, 3)), 1e-15);
  const auto root = matrix_power(HermitianMatrix::diagonal({4.0, 9.0}), 0.5);
  EXPECT_NEAR(root(0, 0).real(), 2.0, 1e-14);
  EXPECT_NEAR(root(1, 1).real(), 3.0, 1e-14);
  EXPECT_NEAR(std::abs(root(0, 1)), 0.0, 1e-14);

  const auto a = HermitianMatrix::real({{2, 1}, {1, 2}});
  const auto s = matrix_power(a, 0.5);
  const double big = (std::sqrt(3.0) + 1.0) / 2.0;
  const double small = (std::sqrt(3.0) - 1.0) / 2.0;
  EXPECT_NEAR(s(0, 0).real(), big, 1e-14);
  EXPECT_NEAR(s(0, 1).real(), small, 1e-14);
  EXPECT_NEAR(s(0, 0).real(), 1.3660, 5e-5);
  EXPECT_NEAR(s(0, 1).real(), 0.3660, 5e-5);
  EXPECT_LE(relative_frobenius(s.matrix() * s.matrix(), a.matrix()), 1e-14);
}

TEST(MatrixPower, IntegerEndpointsAreExact) {
  SplitMix64 rng(3);
  const auto a = random_hermitian(4, rng);
  EXPECT_EQ(matrix_power(a, 1.0).matrix(), a.matrix());
  EXPECT_EQ(matrix_power(a, 0.0).matrix(), CMatrix::Identity(4, 4));
}

TEST(MatrixPower, DomainErrors) {
  const auto indefinite = HermitianMatrix::diagonal({-1.0, 2.0});
  EXPECT_EQ(code_of([&] { matrix_power(indefinite, 0.5); }), Errc::NotPositiveSemidefinite);
  const auto singular = HermitianMatrix::diagonal({0.0, 2.0});
  EXPECT_EQ(code_of([&] { matrix_power(singular, -1.0); }), Errc::SingularMatrix);
  EXPECT_NO_THROW(matrix_power(singular, 0.5));
  EXPECT_NO_THROW(matrix_power(indefinite, 2.0));
}

TEST(MatrixPower, PowerLawFromOneDecomposition) {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_pd(1 + trial % 6, rng);
    const auto d = eigh(a);
    const double s = rng.uniform(-2.0, 2.0);
    const double t = rng.uniform(-2.0, 2.0);
    const CMatrix lhs = matrix_power(d, s + t).matrix();
    const CMatrix rhs = matrix_power(d, s).matrix() * matrix_power(d, t).matrix();
    EXPECT_LE(relative_frobenius(rhs, lhs), 1e-9) << "s=" << s << " t=" << t;
  }
}

TEST(MatrixPower, SquareRootRoundTrip) {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_pd(1 + trial % 10, rng, 1e-3);
    const auto r = matrix_power(a, 0.5);
    EXPECT_LE(relative_frobenius(r.matrix() * r.matrix(), a.matrix()), 1e-9);
  }
}

TEST(LoewnerGap, Examples) {
  EXPECT_NEAR(loewner_gap(HermitianMatrix::diagonal({1, 2}), HermitianMatrix::diagonal({2, 3})), 1.0, 1e-15);
  SplitMix64 rng(1);
  const auto a = random_hermitian(3, rng);
  EXPECT_NEAR(loewner_gap(a, a), 0.0, 1e-15);
  EXPECT_NEAR(loewner_gap(HermitianMatrix::diagonal({1, 3}), HermitianMatrix::diagonal({2, 2})), -1.0, 1e-15);
  EXPECT_EQ(code_of([] { loewner_gap(HermitianMatrix::identity(2), HermitianMatrix::identity(3)); }),
            Errc::DimensionMismatch);
}

TEST(LoewnerGap, SampledPsdDominatesZero) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = sample_constrained(4, 0.01, 5.0, seed, seed % 2 == 0);
    EXPECT_GE(loewner_gap(HermitianMatrix::zero(4), a), 0.0);
  }
}

TEST(LoewnerGap, LoewnerHeinzForSmallPowers) {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 2 + trial % 4;
    const auto a = random_pd(n, rng);
    const auto b = a + random_pd(n, rng, 0.0) * 0.3;
    const double p = rng.uniform(0.05, 1.0);
    const auto bp = matrix_power(b, p);
    EXPECT_GE(loewner_gap(matrix_power(a, p), bp), -1e-9 * (1.0 + op_norm(bp))) << "p=" << p;
  }
}

TEST(OpNorm, Examples) {
  EXPECT_DOUBLE_EQ(op_norm(HermitianMatrix::diagonal({1, -3})), 3.0);
  EXPECT_DOUBLE_EQ(op_norm(HermitianMatrix::identity(5)), 1.0);
  EXPECT_NEAR(op_norm(HermitianMatrix::real({{0, 2}, {2, 0}})), 2.0, 1e-15);
  EXPECT_DOUBLE_EQ(op_norm(HermitianMatrix::zero(3)), 0.0);
}

TEST(SpectralNorm, MatchesSingularValue) {
  CMatrix x(2, 2);
  x << 0.0, 2.0, 0.0, 0.0;
  EXPECT_NEAR(spectral_norm(x), 2.0, 1e-14);
}

TEST(MatrixIo, RoundTripsBitForBit) {
  SplitMix64 rng(4);
  const auto a = random_hermitian(4, rng, 3.7);
  const auto back = parse_matrix(dump_matrix(a));
  EXPECT_EQ(back.matrix(), a.matrix());
}

TEST(MatrixIo, ImaginaryPartIsOptional) {
  const auto a = parse_matrix(R"({"n": 2, "re": [[1, 0.5], [0.5, 2]]})");
  EXPECT_DOUBLE_EQ(a(0, 1).real(), 0.5);
  EXPECT_EQ(to_json(a).contains("im"), false);
  EXPECT_EQ(code_of([] { parse_matrix(R"({"n": 2, "re": [[1, 0.5]]})"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { parse_matrix("not json"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { parse_matrix(R"({"n": 2, "re": [[1, 0.5], [0.0, 2]]})"); }), Errc::NonHermitianInput);
}
