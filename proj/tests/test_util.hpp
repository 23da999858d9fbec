#pragma once

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "opineq/linalg.hpp"
#include "opineq/rng.hpp"

namespace opineq::testing {

inline HermitianMatrix random_hermitian(Index n, SplitMix64& rng, double scale = 1.0) {
  CMatrix g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = scale * rng.complex_normal();
  return HermitianMatrix::hermitian_part(g);
}

/// G G* + shift I, positive definite for shift > 0.
inline HermitianMatrix random_pd(Index n, SplitMix64& rng, double shift = 0.5) {
  CMatrix g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  return HermitianMatrix::hermitian_part(g * g.adjoint() + shift * CMatrix::Identity(n, n));
}

/// Eigenvalues from Eigen's solver, ascending; independent of the Jacobi code.
inline RVector oracle_eigenvalues(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// min over [m, M] of secant(t) / t^nu by golden-section search.
inline double secant_minimum(double m, double M, double nu) {
  const auto f = [&](double t) {
    const double secant = std::pow(m, nu) + (std::pow(M, nu) - std::pow(m, nu)) * (t - m) / (M - m);
    return secant / std::pow(t, nu);
  };
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = m, b = M;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && b - a > 1e-15 * M; ++it) {
    if (fc < fd) {
      b = d, d = c, fd = fc;
      c = b - phi * (b - a), fc = f(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + phi * (b - a), fd = f(d);
    }
  }
  return std::min({f(a), f(b), f(0.5 * (a + b))});
}

}  // namespace opineq::testing
