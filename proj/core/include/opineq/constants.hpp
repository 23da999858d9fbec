#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace opineq {

enum class BoundsKind { Common, SandwichBLow, SandwichALow, ReverseAndo };

std::string_view to_string(BoundsKind kind) noexcept;
/// Accepts "common", "sandwich_B_low", "sandwich_A_low", "reverse_ando".
BoundsKind bounds_kind_from_string(std::string_view name);

/// Scalar hypothesis data attached to an instance.
///   common:         m <= A, B <= M
///   sandwich_B_low: m <= B <= mp < Mp <= A <= M
///   sandwich_A_low: m <= A <= mp < Mp <= B <= M
///   reverse_ando:   m1^2 <= A <= M1^2,  m2^2 <= B <= M2^2
struct SandwichBounds {
  BoundsKind kind = BoundsKind::Common;
  double m = 1.0, mp = 1.0, Mp = 1.0, M = 1.0;
  double m1 = 1.0, M1 = 1.0, m2 = 1.0, M2 = 1.0;

  static SandwichBounds common(double m, double M);
  static SandwichBounds sandwich_b_low(double m, double mp, double Mp, double M);
  static SandwichBounds sandwich_a_low(double m, double mp, double Mp, double M);
  static SandwichBounds reverse_ando(double m1, double M1, double m2, double M2);

  /// Throws BadBounds when the invariants of `kind` fail.
  void validate() const;

  bool is_sandwich() const noexcept {
    return kind == BoundsKind::SandwichBLow || kind == BoundsKind::SandwichALow;
  }
  /// M/m (outer ratio). For reverse_ando: the separation ratio (m2/M1)^2 when
  /// M1 < m2, (M2/m1)^2 when M2 < m1; HypothesisNotMet otherwise.
  double h() const;
  /// Mp/mp (inner ratio); sandwich kinds only.
  double h_prime() const;
  /// Spectral interval of A^{-1/2} B A^{-1/2} for reverse_ando: [(m2/M1)^2, (M2/m1)^2].
  double ando_lo() const noexcept { return (m2 / M1) * (m2 / M1); }
  double ando_hi() const noexcept { return (M2 / m1) * (M2 / m1); }
  bool separated() const noexcept { return M1 < m2 || M2 < m1; }

  /// Spectral interval hypothesized for A and for B.
  std::pair<double, double> interval_a() const;
  std::pair<double, double> interval_b() const;
};

/// nu: weight in [0, 1]; p: power; alpha: exponent in [1, 2] (only a few entries use it).
struct CaseParams {
  double nu = 0.5;
  double p = 2.0;
  double alpha = 1.0;
};

/// (1 + h)^2 / (4 h); NonPositiveArgument for h <= 0.
double kantorovich(double h);

struct Weights {
  double r;   ///< min(nu, 1 - nu)
  double r1;  ///< min(2r, 1 - 2r)
};
Weights weights(double nu);

struct GeneralizedKantorovich {
  double K;
  double mu0;
  double lambda0;
};
/// Closed form K(m, M, nu) together with mu0 = nu (M - m)/(M^nu - m^nu) and
/// lambda0 = nu/(1-nu) (M^{1-nu} - m^{1-nu})/(m^{-nu} - M^{-nu}). At nu in {0, 1}
/// K = 1 and mu0, lambda0 take their limits.
GeneralizedKantorovich generalized_kantorovich(double m, double M, double nu);

/// Which spectral hypotheses an entry needs.
enum class HypothesisSet { None, Common, Sandwich, SandwichALow, ReverseAndo, ReverseAndoSeparated };
std::string_view to_string(HypothesisSet set) noexcept;
bool satisfies(const SandwichBounds& bounds, HypothesisSet set) noexcept;

/// Admissible p: lo (inclusive or not) up to hi (inclusive or not). When
/// `lo_times_alpha` the lower end is lo * alpha.
struct PDomain {
  double lo = 0.0;
  bool lo_inclusive = false;
  double hi = 1e300;
  bool hi_inclusive = true;
  bool lo_times_alpha = false;

  bool contains(double p, double alpha) const noexcept;
  std::string describe() const;
};

struct ConstantFamily {
  std::string_view name;
  HypothesisSet hypothesis;
  std::optional<PDomain> p_domain;  ///< nullopt: p is not a parameter
  bool alpha_in_unit_interval_2;    ///< requires 1 <= alpha <= 2
  double (*value)(const SandwichBounds&, const CaseParams&);
};

std::span<const ConstantFamily> constant_families();

/// Strips a trailing "-phi-inside"/"-phi-outside" and looks up the family.
/// Throws UnknownInequality.
const ConstantFamily& constant_family(std::string_view ineq_id);

/// Throws HypothesisNotMet naming the violated clause.
void check_hypotheses(const ConstantFamily& family, const SandwichBounds& bounds, const CaseParams& params);

/// The scalar the inequality places in front of its right-hand side.
double bound_constant(std::string_view ineq_id, const SandwichBounds& bounds, const CaseParams& params);

}  // namespace opineq
