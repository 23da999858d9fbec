#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "opineq/linalg.hpp"
#include "opineq/matrix_io.hpp"

namespace opineq {

enum class MapKind { Identity, TraceAverage, Compression, Pinching, UnitaryMixture, Diagonal };

std::string_view to_string(MapKind kind) noexcept;
/// Throws UnknownKind.
MapKind map_kind_from_string(std::string_view name);
/// All catalog kinds, in the order the suite cycles through them.
std::span<const MapKind> map_catalog() noexcept;

/// A positive unital linear map.
///   identity        X -> X
///   trace_average   X -> (tr X / n) I
///   compression     X -> V* X V, V an n x k isometry (output is k x k)
///   pinching        X -> block diagonal part of X (blocks = consecutive sizes)
///   unitary_mixture X -> sum_i w_i U_i* X U_i, w_i > 0, sum w_i = 1
///   diagonal        X -> diag(X)
struct MapSpec {
  MapKind kind = MapKind::Identity;
  Index n = 1;
  CMatrix isometry;
  std::vector<Index> blocks;
  std::vector<double> weights;
  std::vector<CMatrix> unitaries;

  static MapSpec identity(Index n);
  static MapSpec trace_average(Index n);
  static MapSpec diagonal(Index n);
  static MapSpec compression(CMatrix isometry);
  static MapSpec pinching(std::vector<Index> blocks);
  static MapSpec unitary_mixture(std::vector<double> weights, std::vector<CMatrix> unitaries);

  Index output_dim() const noexcept;

  /// Structural checks; throws MalformedSpec (non-isometric V, weights not
  /// summing to 1 within 1e-12, non-unitary U_i, bad block partition).
  void validate() const;
};

HermitianMatrix apply_map(const MapSpec& phi, const HermitianMatrix& a);

struct ValidationReport {
  double unitality_residual = 0.0;    ///< ||Phi(I) - I||
  double worst_positivity_gap = 0.0;  ///< min over trials of lambda_min(Phi(P)) / (1 + lambda_max(Phi(P)))
  double linearity_residual = 0.0;    ///< max ||Phi(X + cY) - Phi(X) - c Phi(Y)|| / (1 + ||Phi(X)|| + |c| ||Phi(Y)||)
  int trials = 0;
  bool pass = false;
};

/// Tolerance for every residual in ValidationReport.
inline constexpr double kMapValidationTolerance = 1e-9;

ValidationReport validate_map(const MapSpec& phi, int trials, std::uint64_t seed);

/// Deterministic in (n, kind, seed). Compressions keep k in [1, n-1] (k = 1
/// when n = 1); pinchings are uniform over compositions of n; mixtures use
/// 2 or 3 Haar unitaries with normalized U[0.1, 1] weights.
MapSpec random_map(Index n, MapKind kind, std::uint64_t seed);
MapSpec random_map(Index n, std::string_view kind, std::uint64_t seed);

/// {"kind": ..., "n": ..., payload} with matrices in the rectangular matrix format.
Json to_json(const MapSpec& phi);
MapSpec map_from_json(const Json& doc);

}  // namespace opineq
