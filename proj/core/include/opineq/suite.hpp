#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opineq/verifier.hpp"

namespace opineq {

enum class EndpointMode { Never, Always, Alternate };
std::string_view to_string(EndpointMode mode) noexcept;

/// User-fixed hypothesis data. Each entry receives bounds of its own kind:
/// common (m, M), sandwich (m, mp, Mp, M) or reverse-Ando (m1, M1, m2, M2).
/// Missing reverse-Ando values are synthesized as m1 = M1 = sqrt(m) and
/// m2 = M2 = sqrt(M).
struct FixedBounds {
  double m = 1.0, mp = 1.5, Mp = 2.0, M = 4.0;
  std::optional<double> m1, M1, m2, M2;
  bool a_low = false;  ///< sandwich entries put A in the low interval

  SandwichBounds for_hypothesis(HypothesisSet set) const;
};

struct SuiteConfig {
  std::vector<std::string> ids;           ///< empty: the whole registry
  std::vector<Index> dims{2, 3, 5};
  int trials = 100;
  std::uint64_t seed = 42;
  std::vector<double> nu_grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<double> p_grid;             ///< empty: per-entry defaults
  std::vector<double> alpha_grid{1.0, 1.25, 1.5, 2.0};
  std::optional<FixedBounds> bounds;      ///< empty: drawn per trial
  BoundsRange range;
  EndpointMode endpoints = EndpointMode::Never;
  std::vector<MapKind> maps{map_catalog().begin(), map_catalog().end()};
  double tol = kVerdictTolerance;
  double rhs_scale = 1.0;
  unsigned threads = 0;                   ///< 0: hardware concurrency; never affects results
  int failure_dump_limit = 5;             ///< full case dumps kept per id

  /// Throws ConfigInvalid.
  void validate() const;
};

/// Every registry id, n in {2, 3, 5}, 100 trials, alternating forced endpoints.
SuiteConfig selftest_config(std::uint64_t seed);

struct CaseRecord {
  std::string id;
  std::uint64_t seed = 0;
  Index n = 0;
  std::string map;
  CaseParams params;
  double lhs_norm = 0.0;
  double rhs_norm = 0.0;
  double gap = 0.0;
  double relative_gap = 0.0;
  bool holds = false;
  bool asserted = true;
  std::string error;  ///< non-empty when evaluation threw; the case counts as a failure
  int trial = 0;
};

struct SummaryRow {
  std::string id;
  int trials = 0;
  int failures = 0;
  double worst_relative_gap = 0.0;
  bool asserted = true;
};

struct Report {
  std::uint64_t config_hash = 0;
  Json config;
  std::vector<CaseRecord> cases;       ///< sorted by (id, n, trial)
  std::vector<SummaryRow> summary;     ///< sorted by id
  std::vector<Json> failure_dumps;     ///< replayable cases, up to the configured limit per id

  /// True when no asserted entry failed.
  bool asserted_ok() const noexcept;
};

/// Canonical JSON of the result-affecting fields (threads excluded).
Json config_to_json(const SuiteConfig& config);

/// Builds the case for (id, n, trial) exactly as run_suite does.
InequalityCase plan_case(const SuiteConfig& config, const InequalityEntry& entry, Index n, int trial);

Report run_suite(const SuiteConfig& config);

}  // namespace opineq
