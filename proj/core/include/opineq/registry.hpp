#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opineq/constants.hpp"
#include "opineq/linalg.hpp"
#include "opineq/maps.hpp"

namespace opineq {

/// Loewner: gap = lambda_min(RHS - LHS). Norm: gap = RHS - LHS as scalars.
enum class EntryForm { Loewner, Norm };

struct EvalInput {
  const HermitianMatrix& A;
  const HermitianMatrix& B;
  const SandwichBounds& bounds;
  const MapSpec& phi;
  const CaseParams& params;  ///< already normalized by effective_params
  const EigenOptions& eig;
  double rhs_scale;
};

struct Evaluation {
  double lhs_norm = 0.0;
  double rhs_norm = 0.0;
  double gap = 0.0;
};

struct InequalityEntry {
  std::string id;
  std::string statement;      ///< one-line formula, shown by the CLI help
  std::string constant;       ///< constant family, empty when the entry has none
  HypothesisSet hypothesis = HypothesisSet::Common;
  EntryForm form = EntryForm::Loewner;
  bool uses_map = false;
  bool uses_nu = false;
  bool uses_p = false;
  bool uses_alpha = false;
  bool asserted = true;       ///< informational entries are reported but never fail a run
  double fixed_nu = 0.5;      ///< used when !uses_nu
  double fixed_p = 1.0;       ///< used when !uses_p
  std::optional<PDomain> p_domain;
  double alpha_lo = 1.0, alpha_hi = 2.0;
  /// Default suite grid for p. With p_grid_from_2alpha the values are
  /// offsets added to 2 * alpha.
  std::vector<double> p_grid;
  bool p_grid_from_2alpha = false;
  std::function<Evaluation(const EvalInput&)> evaluate;
};

/// All entries, sorted by id.
std::span<const InequalityEntry> registry();

/// Accepts the alias "scalar_lemma". Throws UnknownInequality.
const InequalityEntry& find_entry(std::string_view id);

/// The suite's p values for `entry` at a given alpha.
std::vector<double> default_p_values(const InequalityEntry& entry, double alpha);

/// nu, p, alpha replaced by the fixed values for parameters the entry ignores.
CaseParams effective_params(const InequalityEntry& entry, CaseParams params);

/// Bounds kind and parameter domains. Throws HypothesisNotMet naming the clause.
void check_entry_hypotheses(const InequalityEntry& entry, const SandwichBounds& bounds, const CaseParams& params);

/// Pairs (refined, base) whose constant ratio refined/base is claimed <= 1.
struct RefinementClaim {
  std::string_view refined;
  std::string_view base;
};
std::span<const RefinementClaim> refinement_claims();

}  // namespace opineq
