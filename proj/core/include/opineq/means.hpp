#pragma once

#include "opineq/linalg.hpp"

namespace opineq {

// Weight convention: nu always attaches to the second argument, so that
//   A nabla_nu B = (1 - nu) A + nu B,
//   A #_nu B     = A^{1/2} (A^{-1/2} B A^{-1/2})^nu A^{1/2},
// and A #_nu B <= A nabla_nu B holds with matching weights. The opposite
// convention is recovered by nu -> 1 - nu.

/// Throws WeightOutOfRange unless 0 <= nu <= 1.
void check_weight(double nu);

/// (1 - nu) A + nu B.
HermitianMatrix arithmetic_mean(const HermitianMatrix& a, const HermitianMatrix& b, double nu);

/// A^{1/2} (A^{-1/2} B A^{-1/2})^nu A^{1/2}. A must be positive definite,
/// B positive semidefinite.
HermitianMatrix geometric_mean(const HermitianMatrix& a, const HermitianMatrix& b, double nu,
                               const EigenOptions& opts = {});

/// A nabla_nu B + 2 r M m (A^{-1} nabla B^{-1} - A^{-1} # B^{-1}) with
/// r = min(nu, 1 - nu); the unweighted means inside use nu = 1/2.
/// The added term is PSD, so the result dominates A nabla_nu B.
HermitianMatrix bracket_term(const HermitianMatrix& a, const HermitianMatrix& b, double m, double big_m,
                             double nu, const EigenOptions& opts = {});

}  // namespace opineq
