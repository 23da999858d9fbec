#pragma once

#include <cstdint>

#include "opineq/constants.hpp"
#include "opineq/linalg.hpp"
#include "opineq/matrix_io.hpp"
#include "opineq/rng.hpp"

namespace opineq {

/// Classical Gram-Schmidt applied twice, column by column. The triangular
/// factor then has a positive real diagonal, so no extra phase correction
/// is needed for Haar measure. Throws SingularMatrix on rank deficiency.
CMatrix orthonormalize_columns(CMatrix z);

/// Haar-distributed n x n unitary: complex Gaussian matrix (entries drawn
/// row-major from `rng.complex_normal()`), then orthonormalize_columns.
CMatrix haar_unitary(Index n, SplitMix64& rng);

/// n x k matrix with orthonormal columns, same construction as haar_unitary.
CMatrix random_isometry(Index n, Index k, SplitMix64& rng);

/// Q diag(lambda) Q* with lambda_i ~ U[lo, hi] (drawn first) and Q Haar.
/// With force_endpoints and n >= 2 the first and last eigenvalues are lo and
/// hi exactly. lo == hi returns lo * I exactly.
HermitianMatrix sample_constrained(Index n, double lo, double hi, std::uint64_t seed, bool force_endpoints);

struct Instance {
  HermitianMatrix A;
  HermitianMatrix B;
  SandwichBounds bounds;
  std::uint64_t seed = 0;
  Index n = 0;
  bool force_endpoints = false;
};

/// A and B drawn with sample_constrained on the intervals of `bounds`
/// (seeds derive_seed(seed, 1) and derive_seed(seed, 2)).
Instance sample_instance(const SandwichBounds& bounds, Index n, std::uint64_t seed, bool force_endpoints);

/// Absolute slack when checking spectra against hypothesized intervals.
inline constexpr double kSpectrumSlack = 1e-10;

/// Checks via eigh that spec(A), spec(B) lie in their intervals; throws
/// HypothesisNotMet otherwise.
void verify_instance(const Instance& instance, const EigenOptions& opts = {});

/// Ranges used when drawing random hypothesis data.
struct BoundsRange {
  double h_lo = 1.5;
  double h_hi = 20.0;
  double scale_lo = 0.5;
  double scale_hi = 2.0;
};

/// Random bounds satisfying `set`: h = M/m log-uniform in [h_lo, h_hi],
/// h' in (1, h). Sandwich draws pick B-low or A-low by a fair coin. For
/// reverse-Ando sets h is the separation ratio of the two spectra.
SandwichBounds draw_bounds(HypothesisSet set, SplitMix64& rng, const BoundsRange& range = {});

Json to_json(const SandwichBounds& bounds);
SandwichBounds bounds_from_json(const Json& doc);
Json to_json(const Instance& instance);
Instance instance_from_json(const Json& doc);

}  // namespace opineq
