#include "opineq/means.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "opineq/error.hpp"

namespace opineq {

void check_weight(double nu) {
  if (!(nu >= 0.0 && nu <= 1.0)) {
    std::ostringstream os;
    os << "weight nu=" << nu << " outside [0, 1]";
    throw Error(Errc::WeightOutOfRange, os.str());
  }
}

HermitianMatrix arithmetic_mean(const HermitianMatrix& a, const HermitianMatrix& b, double nu) {
  check_weight(nu);
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "arithmetic_mean operands differ in size");
  return a * (1.0 - nu) + b * nu;
}

HermitianMatrix geometric_mean(const HermitianMatrix& a, const HermitianMatrix& b, double nu,
                               const EigenOptions& opts) {
  check_weight(nu);
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "geometric_mean operands differ in size");

  const auto da = eigh(a, opts);
  if (!(da.min() > kSingularTolerance * da.max()))
    throw Error(Errc::SingularMatrix, "geometric_mean needs a positive definite first argument");
  const auto db = eigh(b, opts);
  if (!is_psd(db))
    throw Error(Errc::NotPositiveSemidefinite, "geometric_mean needs a positive semidefinite second argument");

  const HermitianMatrix a_half = da.apply([](double x) { return std::sqrt(x); });
  const HermitianMatrix a_neg_half = da.apply([](double x) { return 1.0 / std::sqrt(x); });
  const HermitianMatrix inner = congruence(a_neg_half.matrix(), b);
  const HermitianMatrix inner_pow = matrix_power(inner, nu, opts);
  return congruence(a_half.matrix(), inner_pow);
}

HermitianMatrix bracket_term(const HermitianMatrix& a, const HermitianMatrix& b, double m, double big_m,
                             double nu, const EigenOptions& opts) {
  check_weight(nu);
  if (!(m > 0.0) || !(m <= big_m)) {
    std::ostringstream os;
    os << "bracket_term needs 0 < m <= M, got m=" << m << ", M=" << big_m;
    throw Error(Errc::BadBounds, os.str());
  }
  const double r = std::min(nu, 1.0 - nu);
  const HermitianMatrix mean = arithmetic_mean(a, b, nu);
  if (r == 0.0) return mean;
  const HermitianMatrix a_inv = inverse(a, opts);
  const HermitianMatrix b_inv = inverse(b, opts);
  const HermitianMatrix defect = arithmetic_mean(a_inv, b_inv, 0.5) - geometric_mean(a_inv, b_inv, 0.5, opts);
  return mean + defect * (2.0 * r * big_m * m);
}

}  // namespace opineq
