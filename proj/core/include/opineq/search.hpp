#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "opineq/verifier.hpp"

namespace opineq {

struct SearchOptions {
  Index n = 3;
  std::optional<double> nu;       ///< pin nu instead of searching over it
  std::optional<MapKind> map;     ///< pin the map kind; otherwise drawn per restart
  BoundsRange range;
  EigenOptions eig;
  double tol = kVerdictTolerance;
};

struct SearchRecord {
  std::string ineq_id;
  int evaluations = 0;
  int restarts = 0;
  double best_gap = 0.0;
  double best_relative_gap = 0.0;
  InequalityCase best_case;
  Json parameters;                   ///< coordinates, bounds, map and parameters of the best case
  bool violation_found = false;      ///< best relative gap below -tol
  bool violation_confirmed = false;  ///< still below -tol with a 100x stricter eigensolver
};

/// Random-restart coordinate descent on the relative gap. Coordinates are the
/// eigenvalue positions of A and B inside their hypothesis intervals (unit
/// cube), plus nu, p and alpha when the entry uses them. Each restart draws
/// fresh bounds, Haar bases (shared on even restarts, so commuting pairs are
/// explored) and a map. `budget` counts evaluations.
SearchRecord tightness_search(std::string_view ineq_id, int budget, std::uint64_t seed,
                              const SearchOptions& opts = {});

Json to_json(const SearchRecord& record);

}  // namespace opineq
