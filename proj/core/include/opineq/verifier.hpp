#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "opineq/constants.hpp"
#include "opineq/linalg.hpp"
#include "opineq/maps.hpp"
#include "opineq/matrix_io.hpp"
#include "opineq/registry.hpp"
#include "opineq/sampler.hpp"

namespace opineq {

/// A verdict holds when relative_gap >= -kVerdictTolerance.
inline constexpr double kVerdictTolerance = 1e-9;

struct CheckOptions {
  EigenOptions eig;
  /// Multiplies the right-hand side; values below 1 make every check
  /// stricter (used to confirm the checker can fail).
  double rhs_scale = 1.0;
  double tol = kVerdictTolerance;
};

struct InequalityCase {
  std::string ineq_id;
  Instance instance;
  MapSpec phi;
  CaseParams params;
};

struct Verdict {
  std::string ineq_id;
  double lhs_norm = 0.0;
  double rhs_norm = 0.0;
  double gap = 0.0;           ///< lambda_min(RHS - LHS), or RHS - LHS for norm entries
  double relative_gap = 0.0;  ///< gap / (1 + rhs_norm)
  bool holds = false;
  bool asserted = true;
  std::uint64_t seed = 0;
  Index n = 0;
  std::string map;
  CaseParams params;          ///< effective parameters
};

/// Hypothesis gate: bounds kind, parameter domains, map dimension, and the
/// realized spectra of A and B. Throws HypothesisNotMet / DimensionMismatch.
void gate_case(const InequalityCase& c, const CheckOptions& opts = {});

Verdict check_case(const InequalityCase& c, const CheckOptions& opts = {});

/// (1-nu) + nu x - 2r((1+x)/2 - sqrt x) - K^{r1}(sqrt x) x^nu. NonPositiveArgument for x <= 0.
double scalar_lemma_gap(double x, double nu);

struct FCheckReport {
  double mu0 = 0.0;
  double lambda0 = 0.0;
  double max_value = 0.0;       ///< max of F(t) = nu t^{1-nu} + (1-nu) lambda0 t^{-nu} over the grid
  double max_residual = 0.0;    ///< |max_value - mu0|
  double residual_at_m = 0.0;   ///< |F(m) - mu0|
  double residual_at_M = 0.0;   ///< |F(M) - mu0|
  bool pass = false;            ///< all residuals <= 1e-9 (1 + mu0)
};

/// Grid of `grid_size` equally spaced points on [m, M], endpoints included.
FCheckReport scalar_F_check(double m, double M, double nu, int grid_size);

/// bound_constant(a) / bound_constant(b). The hypothesis sets of the two ids
/// must be nested (IncompatibleEntries otherwise) and `bounds` must satisfy
/// the narrower one.
double compare_constants(std::string_view id_a, std::string_view id_b, const SandwichBounds& bounds,
                         const CaseParams& params);

Json to_json(const InequalityCase& c);
InequalityCase case_from_json(const Json& doc);
Json to_json(const CaseParams& params);
CaseParams params_from_json(const Json& doc);

}  // namespace opineq
