#include "opineq/constants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "opineq/error.hpp"
#include "opineq/means.hpp"

namespace opineq {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

[[noreturn]] void bad_bounds(const std::string& what) { throw Error(Errc::BadBounds, what); }

// Shorthands for the family formulas.
double K(double h) { return kantorovich(h); }
double hh(const SandwichBounds& b) { return b.h(); }
double root_hp(const SandwichBounds& b) { return std::sqrt(b.h_prime()); }

double lin(const SandwichBounds& b, const CaseParams&) { return K(hh(b)); }
double lin_sq(const SandwichBounds& b, const CaseParams&) { return std::pow(K(hh(b)), 2.0); }
double lin_p(const SandwichBounds& b, const CaseParams& c) { return std::pow(K(hh(b)), c.p); }

double fu_he_base(const SandwichBounds& b, double p) {
  return (b.M + b.m) * (b.M + b.m) / (std::pow(4.0, 2.0 / p) * b.M * b.m);
}
double fu_he(const SandwichBounds& b, const CaseParams& c) { return std::pow(fu_he_base(b, c.p), c.p); }
double bakherad(const SandwichBounds& b, const CaseParams& c) {
  return std::pow(std::max(K(hh(b)), fu_he_base(b, c.p)), c.p);
}
double yang_wang(const SandwichBounds& b, const CaseParams& c) {
  const double r = weights(c.nu).r;
  return std::pow(K(hh(b)) / (std::pow(4.0, 2.0 / c.p - 1.0) * std::pow(K(b.h_prime()), r)), c.p);
}
double lemma_refined(const SandwichBounds& b, const CaseParams& c) {
  return std::pow(K(root_hp(b)), weights(c.nu).r1);
}
double squared_refined(const SandwichBounds& b, const CaseParams& c) {
  return std::pow(K(hh(b)) / lemma_refined(b, c), 2.0);
}
double p_refined(const SandwichBounds& b, const CaseParams& c) {
  return std::pow(K(hh(b)) / lemma_refined(b, c), c.p);
}
double high_power_refined(const SandwichBounds& b, const CaseParams& c) {
  return std::pow(K(hh(b)) / (std::pow(4.0, 2.0 / c.p - 1.0) * lemma_refined(b, c)), c.p);
}
double zhang_base(const SandwichBounds& b, double p) {
  return K(hh(b)) * (b.M * b.M + b.m * b.m) / (std::pow(4.0, 2.0 / p) * b.M * b.m);
}
double zhang(const SandwichBounds& b, const CaseParams& c) { return std::pow(zhang_base(b, c.p), c.p); }
double zhang_refined(const SandwichBounds& b, const CaseParams& c) {
  const double r = weights(c.nu).r;
  return std::pow(zhang_base(b, c.p) / std::pow(K(b.h_prime()), r), c.p);
}
double zhang_refined_proof(const SandwichBounds& b, const CaseParams& c) {
  return std::pow(zhang_base(b, c.p) / lemma_refined(b, c), c.p);
}
double alpha_family(const SandwichBounds& b, const CaseParams& c) {
  const double a = c.alpha;
  const double r1 = weights(c.nu).r1;
  const double inner = std::pow(K(root_hp(b)), -r1 * a / 2.0) * std::pow(K(hh(b)), a / 2.0) *
                       (std::pow(b.M, a) + std::pow(b.m, a));
  return std::pow(inner, 2.0 * c.p / a) / (16.0 * std::pow(b.M, c.p) * std::pow(b.m, c.p));
}
double lee(const SandwichBounds& b, const CaseParams&) {
  const double lo = b.ando_lo();
  const double hi = b.ando_hi();
  return (std::sqrt(hi) + std::sqrt(lo)) / (2.0 * std::pow(hi * lo, 0.25));
}
double lee_printed(const SandwichBounds& b, const CaseParams&) {
  const double lo = b.m2 / b.M1;
  const double hi = b.M2 / b.m1;
  return (std::sqrt(hi) + std::sqrt(lo)) / (2.0 * std::sqrt(hi * lo));
}
double seo_k(const SandwichBounds& b, double nu) {
  const double lo = b.ando_lo();
  const double hi = b.ando_hi();
  if (hi <= lo * (1.0 + 1e-12)) return 1.0;  // scalar interval: K(m, m, nu) = 1 by continuity
  return generalized_kantorovich(lo, hi, nu).K;
}
double seo(const SandwichBounds& b, const CaseParams& c) { return 1.0 / seo_k(b, c.nu); }
double separated_reverse(const SandwichBounds& b, const CaseParams& c) {
  return 1.0 / (seo_k(b, c.nu) * std::pow(K(hh(b)), weights(c.nu).r));
}
double young_outer(const SandwichBounds& b, const CaseParams& c) {
  return std::pow(K(hh(b)), weights(c.nu).r);
}
double young_inner(const SandwichBounds& b, const CaseParams& c) {
  return std::pow(K(b.h_prime()), weights(c.nu).r);
}

constexpr PDomain kAnyPositive{0.0, false, 1e300, true, false};
constexpr PDomain kUpToTwo{0.0, false, 2.0, true, false};
constexpr PDomain kAtLeastTwo{2.0, true, 1e300, true, false};
constexpr PDomain kAtLeastFour{4.0, true, 1e300, true, false};
constexpr PDomain kAtLeastTwoAlpha{2.0, true, 1e300, true, true};

using H = HypothesisSet;

const std::array<ConstantFamily, 21> kFamilies{{
    {"lin", H::Common, std::nullopt, false, lin},
    {"lin-sq", H::Common, std::nullopt, false, lin_sq},
    {"lin-p", H::Common, kUpToTwo, false, lin_p},
    {"thm1.1", H::Common, kAtLeastTwo, false, fu_he},
    {"thm1.2", H::Common, kAnyPositive, false, bakherad},
    {"thm1.3", H::SandwichALow, kAtLeastTwo, false, yang_wang},
    {"lemma2.3", H::Sandwich, std::nullopt, false, lemma_refined},
    {"thm2.4", H::Sandwich, std::nullopt, false, squared_refined},
    {"cor2.6", H::Sandwich, kUpToTwo, false, p_refined},
    {"thm2.7", H::Sandwich, kAtLeastTwo, false, high_power_refined},
    {"zhang", H::Common, kAtLeastFour, false, zhang},
    {"ywz", H::Sandwich, kAtLeastFour, false, zhang_refined},
    {"thm2.9", H::Sandwich, kAtLeastFour, false, zhang_refined},
    {"thm2.9-proof", H::Sandwich, kAtLeastFour, false, zhang_refined_proof},
    {"thm2.10", H::Sandwich, kAtLeastTwoAlpha, true, alpha_family},
    {"lee", H::ReverseAndo, std::nullopt, false, lee},
    {"lee-printed", H::ReverseAndo, std::nullopt, false, lee_printed},
    {"seo", H::ReverseAndo, std::nullopt, false, seo},
    {"thm3.3-h", H::Sandwich, std::nullopt, false, young_outer},
    {"thm3.3-hprime", H::Sandwich, std::nullopt, false, young_inner},
    {"thm3.4", H::ReverseAndoSeparated, std::nullopt, false, separated_reverse},
}};

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(BoundsKind kind) noexcept {
  switch (kind) {
    case BoundsKind::Common: return "common";
    case BoundsKind::SandwichBLow: return "sandwich_B_low";
    case BoundsKind::SandwichALow: return "sandwich_A_low";
    case BoundsKind::ReverseAndo: return "reverse_ando";
  }
  return "unknown";
}

BoundsKind bounds_kind_from_string(std::string_view name) {
  if (name == "common") return BoundsKind::Common;
  if (name == "sandwich_B_low") return BoundsKind::SandwichBLow;
  if (name == "sandwich_A_low") return BoundsKind::SandwichALow;
  if (name == "reverse_ando") return BoundsKind::ReverseAndo;
  throw Error(Errc::BadBounds, "unknown bounds kind '" + std::string(name) + "'");
}

SandwichBounds SandwichBounds::common(double m, double M) {
  SandwichBounds b;
  b.kind = BoundsKind::Common;
  b.m = b.mp = m;
  b.M = b.Mp = M;
  b.validate();
  return b;
}

SandwichBounds SandwichBounds::sandwich_b_low(double m, double mp, double Mp, double M) {
  SandwichBounds b;
  b.kind = BoundsKind::SandwichBLow;
  b.m = m, b.mp = mp, b.Mp = Mp, b.M = M;
  b.validate();
  return b;
}

SandwichBounds SandwichBounds::sandwich_a_low(double m, double mp, double Mp, double M) {
  SandwichBounds b = sandwich_b_low(m, mp, Mp, M);
  b.kind = BoundsKind::SandwichALow;
  return b;
}

SandwichBounds SandwichBounds::reverse_ando(double m1, double M1, double m2, double M2) {
  SandwichBounds b;
  b.kind = BoundsKind::ReverseAndo;
  b.m1 = m1, b.M1 = M1, b.m2 = m2, b.M2 = M2;
  b.validate();
  return b;
}

void SandwichBounds::validate() const {
  const auto all_finite = [](std::initializer_list<double> xs) {
    return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
  };
  switch (kind) {
    case BoundsKind::Common:
      if (!all_finite({m, M}) || !(m > 0.0 && m <= M))
        bad_bounds("common bounds need 0 < m <= M, got m=" + fmt(m) + ", M=" + fmt(M));
      return;
    case BoundsKind::SandwichBLow:
    case BoundsKind::SandwichALow:
      if (!all_finite({m, mp, Mp, M}) || !(m > 0.0 && m <= mp && mp < Mp && Mp <= M))
        bad_bounds("sandwich bounds need 0 < m <= m' < M' <= M, got (" + fmt(m) + ", " + fmt(mp) + ", " +
                   fmt(Mp) + ", " + fmt(M) + ")");
      return;
    case BoundsKind::ReverseAndo:
      if (!all_finite({m1, M1, m2, M2}) || !(m1 > 0.0 && m1 <= M1 && m2 > 0.0 && m2 <= M2))
        bad_bounds("reverse-Ando bounds need 0 < m1 <= M1 and 0 < m2 <= M2");
      return;
  }
}

double SandwichBounds::h() const {
  if (kind != BoundsKind::ReverseAndo) return M / m;
  if (M1 < m2) return (m2 / M1) * (m2 / M1);
  if (M2 < m1) return (M2 / m1) * (M2 / m1);
  throw Error(Errc::HypothesisNotMet, "reverse-Ando h needs separated spectra (M1 < m2 or M2 < m1)");
}

double SandwichBounds::h_prime() const {
  if (!is_sandwich()) throw Error(Errc::HypothesisNotMet, "h' needs sandwich bounds m <= m' < M' <= M");
  return Mp / mp;
}

std::pair<double, double> SandwichBounds::interval_a() const {
  switch (kind) {
    case BoundsKind::Common: return {m, M};
    case BoundsKind::SandwichBLow: return {Mp, M};
    case BoundsKind::SandwichALow: return {m, mp};
    case BoundsKind::ReverseAndo: return {m1 * m1, M1 * M1};
  }
  return {m, M};
}

std::pair<double, double> SandwichBounds::interval_b() const {
  switch (kind) {
    case BoundsKind::Common: return {m, M};
    case BoundsKind::SandwichBLow: return {m, mp};
    case BoundsKind::SandwichALow: return {Mp, M};
    case BoundsKind::ReverseAndo: return {m2 * m2, M2 * M2};
  }
  return {m, M};
}

double kantorovich(double h) {
  if (!(h > 0.0)) throw Error(Errc::NonPositiveArgument, "Kantorovich constant needs h > 0, got " + fmt(h));
  return (1.0 + h) * (1.0 + h) / (4.0 * h);
}

Weights weights(double nu) {
  check_weight(nu);
  const double r = std::min(nu, 1.0 - nu);
  return {r, std::min(2.0 * r, 1.0 - 2.0 * r)};
}

GeneralizedKantorovich generalized_kantorovich(double m, double M, double nu) {
  check_weight(nu);
  if (!(m > 0.0) || !(m <= M)) bad_bounds("generalized Kantorovich needs 0 < m <= M");
  if (m == M) throw Error(Errc::DegenerateInterval, "generalized Kantorovich needs m < M");
  if (nu == 0.0) {
    const double log_mean = (M - m) / std::log(M / m);
    return {1.0, log_mean, log_mean};
  }
  if (nu == 1.0) return {1.0, 1.0, M * m * std::log(M / m) / (M - m)};

  const double mn = std::pow(m, nu);
  const double Mn = std::pow(M, nu);
  const double cross = m * Mn - M * mn;
  const double lead = cross / ((nu - 1.0) * (M - m));
  const double k = lead * std::pow((nu - 1.0) / nu * (Mn - mn) / cross, nu);
  const double mu0 = nu * (M - m) / (Mn - mn);
  const double lambda0 =
      nu / (1.0 - nu) * (std::pow(M, 1.0 - nu) - std::pow(m, 1.0 - nu)) / (std::pow(m, -nu) - std::pow(M, -nu));
  return {k, mu0, lambda0};
}

std::string_view to_string(HypothesisSet set) noexcept {
  switch (set) {
    case HypothesisSet::None: return "none";
    case HypothesisSet::Common: return "common";
    case HypothesisSet::Sandwich: return "sandwich";
    case HypothesisSet::SandwichALow: return "sandwich_A_low";
    case HypothesisSet::ReverseAndo: return "reverse_ando";
    case HypothesisSet::ReverseAndoSeparated: return "reverse_ando_separated";
  }
  return "unknown";
}

bool satisfies(const SandwichBounds& b, HypothesisSet set) noexcept {
  switch (set) {
    case HypothesisSet::None: return true;
    case HypothesisSet::Common: return b.kind != BoundsKind::ReverseAndo;
    case HypothesisSet::Sandwich: return b.is_sandwich();
    case HypothesisSet::SandwichALow: return b.kind == BoundsKind::SandwichALow;
    case HypothesisSet::ReverseAndo: return b.kind == BoundsKind::ReverseAndo;
    case HypothesisSet::ReverseAndoSeparated: return b.kind == BoundsKind::ReverseAndo && b.separated();
  }
  return false;
}

bool PDomain::contains(double p, double alpha) const noexcept {
  const double low = lo_times_alpha ? lo * alpha : lo;
  const bool above = lo_inclusive ? p >= low : p > low;
  const bool below = hi_inclusive ? p <= hi : p < hi;
  return std::isfinite(p) && above && below;
}

std::string PDomain::describe() const {
  std::ostringstream os;
  os << "p " << (lo_inclusive ? ">= " : "> ") << lo << (lo_times_alpha ? "*alpha" : "");
  if (hi < 1e300) os << " and p " << (hi_inclusive ? "<= " : "< ") << hi;
  return os.str();
}

std::span<const ConstantFamily> constant_families() { return kFamilies; }

const ConstantFamily& constant_family(std::string_view id) {
  for (std::string_view suffix : {"-phi-inside", "-phi-outside"}) {
    if (id.size() > suffix.size() && id.substr(id.size() - suffix.size()) == suffix) {
      id.remove_suffix(suffix.size());
      break;
    }
  }
  for (const auto& f : kFamilies)
    if (f.name == id) return f;
  throw Error(Errc::UnknownInequality, "no bound constant registered for '" + std::string(id) + "'");
}

void check_hypotheses(const ConstantFamily& family, const SandwichBounds& bounds, const CaseParams& params) {
  bounds.validate();
  if (!satisfies(bounds, family.hypothesis))
    throw Error(Errc::HypothesisNotMet, std::string(family.name) + " requires " +
                                            std::string(to_string(family.hypothesis)) + " bounds, got " +
                                            std::string(to_string(bounds.kind)));
  check_weight(params.nu);
  if (family.alpha_in_unit_interval_2 && !(params.alpha >= 1.0 && params.alpha <= 2.0))
    throw Error(Errc::HypothesisNotMet, std::string(family.name) + " requires 1 <= alpha <= 2, got " +
                                            fmt(params.alpha));
  if (family.p_domain && !family.p_domain->contains(params.p, params.alpha))
    throw Error(Errc::HypothesisNotMet, std::string(family.name) + " requires " + family.p_domain->describe() +
                                            ", got p=" + fmt(params.p));
}

double bound_constant(std::string_view ineq_id, const SandwichBounds& bounds, const CaseParams& params) {
  const auto& family = constant_family(ineq_id);
  check_hypotheses(family, bounds, params);
  return family.value(bounds, params);
}

}  // namespace opineq
