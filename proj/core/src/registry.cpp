#include "opineq/registry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "opineq/error.hpp"
#include "opineq/means.hpp"
#include "opineq/verifier.hpp"

namespace opineq {

namespace {

using HM = HermitianMatrix;

constexpr PDomain kPositive{0.0, false, 1e300, true, false};
constexpr PDomain kUnitPower{0.0, false, 1.0, true, false};

HM phi(const EvalInput& in, const HM& x) { return apply_map(in.phi, x); }
HM power(const HM& x, double p, const EvalInput& in) { return matrix_power(x, p, in.eig); }
HM gmean(const HM& a, const HM& b, double nu, const EvalInput& in) { return geometric_mean(a, b, nu, in.eig); }

Evaluation loewner(const HM& lhs, const HM& rhs_unscaled, const EvalInput& in) {
  const HM rhs = rhs_unscaled * in.rhs_scale;
  return {op_norm(lhs, in.eig), op_norm(rhs, in.eig), loewner_gap(lhs, rhs, in.eig)};
}

Evaluation scalars(double lhs, double rhs, const EvalInput& in) {
  rhs *= in.rhs_scale;
  return {lhs, rhs, rhs - lhs};
}

double constant_value(const std::string& family, const EvalInput& in) {
  return constant_family(family).value(in.bounds, in.params);
}

enum class Lhs { HalfMean, WeightedMean, Bracket };

HM lhs_mean(Lhs kind, const EvalInput& in) {
  switch (kind) {
    case Lhs::HalfMean: return arithmetic_mean(in.A, in.B, 0.5);
    case Lhs::WeightedMean: return arithmetic_mean(in.A, in.B, in.params.nu);
    case Lhs::Bracket: return bracket_term(in.A, in.B, in.bounds.m, in.bounds.M, in.params.nu, in.eig);
  }
  return in.A;
}

std::string_view lhs_text(Lhs kind) {
  switch (kind) {
    case Lhs::HalfMean: return "A nabla B";
    case Lhs::WeightedMean: return "A nabla_nu B";
    case Lhs::Bracket: return "bracket(A, B)";
  }
  return "";
}

struct PowerSpec {
  std::string base;
  Lhs lhs;
  std::string constant;
  std::string constant_text;
  bool uses_p;
  double fixed_p;
  std::vector<double> p_grid;
  bool p_grid_from_2alpha = false;
};

// Phi^p(L) <= c Phi^p(A #_nu B)   (inside)
// Phi^p(L) <= c (Phi(A) #_nu Phi(B))^p   (outside)
InequalityEntry power_entry(const PowerSpec& spec, bool inside) {
  const auto& family = constant_family(spec.constant);
  InequalityEntry e;
  e.id = spec.base + (inside ? "-phi-inside" : "-phi-outside");
  const std::string p_text = spec.uses_p ? "^p" : (spec.fixed_p == 1.0 ? "" : "^2");
  const std::string g_text = spec.lhs == Lhs::HalfMean ? "#" : "#_nu";
  e.statement = "Phi" + p_text + "(" + std::string(lhs_text(spec.lhs)) + ") <= " + spec.constant_text + " " +
                (inside ? "Phi" + p_text + "(A " + g_text + " B)"
                        : "(Phi(A) " + g_text + " Phi(B))" + p_text);
  e.constant = spec.constant;
  e.hypothesis = family.hypothesis;
  e.p_domain = family.p_domain;
  e.uses_map = true;
  e.uses_nu = spec.lhs != Lhs::HalfMean;
  e.uses_p = spec.uses_p;
  e.uses_alpha = family.alpha_in_unit_interval_2;
  e.fixed_p = spec.fixed_p;
  e.p_grid = spec.p_grid;
  e.p_grid_from_2alpha = spec.p_grid_from_2alpha;
  const Lhs lhs_kind = spec.lhs;
  const std::string constant = spec.constant;
  e.evaluate = [lhs_kind, constant, inside](const EvalInput& in) {
    const double p = in.params.p;
    const double nu = in.params.nu;
    const HM lhs = power(phi(in, lhs_mean(lhs_kind, in)), p, in);
    const HM mean = inside ? phi(in, gmean(in.A, in.B, nu, in)) : gmean(phi(in, in.A), phi(in, in.B), nu, in);
    return loewner(lhs, power(mean, p, in) * constant_value(constant, in), in);
  };
  return e;
}

// Phi(A) #_nu Phi(B) <= c Phi(A #_nu B)
InequalityEntry reverse_ando_entry(std::string id, std::string constant, bool uses_nu, std::string text) {
  const auto& family = constant_family(constant);
  InequalityEntry e;
  e.id = std::move(id);
  e.statement = std::move(text);
  e.constant = constant;
  e.hypothesis = family.hypothesis;
  e.uses_map = true;
  e.uses_nu = uses_nu;
  e.evaluate = [constant](const EvalInput& in) {
    const double nu = in.params.nu;
    const HM lhs = gmean(phi(in, in.A), phi(in, in.B), nu, in);
    return loewner(lhs, phi(in, gmean(in.A, in.B, nu, in)) * constant_value(constant, in), in);
  };
  return e;
}

// c (A #_nu B) <= A nabla_nu B
InequalityEntry young_entry(std::string id, std::string constant, bool asserted, std::string text) {
  InequalityEntry e;
  e.id = std::move(id);
  e.statement = std::move(text);
  e.constant = constant;
  e.hypothesis = constant_family(constant).hypothesis;
  e.uses_nu = true;
  e.asserted = asserted;
  e.evaluate = [constant](const EvalInput& in) {
    const double nu = in.params.nu;
    return loewner(gmean(in.A, in.B, nu, in) * constant_value(constant, in), arithmetic_mean(in.A, in.B, nu), in);
  };
  return e;
}

std::vector<InequalityEntry> build_registry() {
  std::vector<InequalityEntry> out;

  {
    InequalityEntry e;
    e.id = "amgm";
    e.statement = "A #_nu B <= A nabla_nu B";
    e.uses_nu = true;
    e.evaluate = [](const EvalInput& in) {
      const double nu = in.params.nu;
      return loewner(gmean(in.A, in.B, nu, in), arithmetic_mean(in.A, in.B, nu), in);
    };
    out.push_back(std::move(e));
  }

  for (bool square : {false, true}) {
    InequalityEntry e;
    e.id = square ? "loewner-heinz-p2" : "loewner-heinz";
    e.statement = square ? "A <= B' implies A^2 <= B'^2 (expected to fail in general)"
                         : "A <= B' implies A^p <= B'^p, 0 < p <= 1";
    e.uses_p = !square;
    e.fixed_p = 2.0;
    e.asserted = !square;
    if (!square) {
      e.p_domain = kUnitPower;
      e.p_grid = {0.5, 1.0};
    }
    // B' = A + B/10 dominates A by construction.
    e.evaluate = [](const EvalInput& in) {
      const HM upper = in.A + in.B * 0.1;
      return loewner(power(in.A, in.params.p, in), power(upper, in.params.p, in), in);
    };
    out.push_back(std::move(e));
  }

  {
    InequalityEntry e;
    e.id = "lin";
    e.statement = "Phi(A nabla B) <= K(h) Phi(A # B)";
    e.constant = "lin";
    e.uses_map = true;
    e.evaluate = [](const EvalInput& in) {
      const HM lhs = phi(in, arithmetic_mean(in.A, in.B, 0.5));
      return loewner(lhs, phi(in, gmean(in.A, in.B, 0.5, in)) * constant_value("lin", in), in);
    };
    out.push_back(std::move(e));
  }

  {
    InequalityEntry e;
    e.id = "choi";
    e.statement = "Phi(A)^-1 <= Phi(A^-1)";
    e.uses_map = true;
    e.evaluate = [](const EvalInput& in) {
      return loewner(inverse(phi(in, in.A), in.eig), phi(in, inverse(in.A, in.eig)), in);
    };
    out.push_back(std::move(e));
  }

  {
    InequalityEntry e;
    e.id = "lemma2.2-i";
    e.statement = "||AB|| <= ||A + B||^2 / 4";
    e.form = EntryForm::Norm;
    e.evaluate = [](const EvalInput& in) {
      const double sum = op_norm(in.A + in.B, in.eig);
      return scalars(spectral_norm(in.A.matrix() * in.B.matrix(), in.eig), 0.25 * sum * sum, in);
    };
    out.push_back(std::move(e));
  }
  {
    InequalityEntry e;
    e.id = "lemma2.2-ii";
    e.statement = "||A^alpha + B^alpha|| <= ||(A + B)^alpha||, alpha >= 1";
    e.form = EntryForm::Norm;
    e.uses_alpha = true;
    e.alpha_lo = 1.0;
    e.alpha_hi = 1e300;
    e.evaluate = [](const EvalInput& in) {
      const double a = in.params.alpha;
      return scalars(op_norm(power(in.A, a, in) + power(in.B, a, in), in.eig),
                     op_norm(power(in.A + in.B, a, in), in.eig), in);
    };
    out.push_back(std::move(e));
  }
  {
    // At alpha* = ||A^{1/2} B^{-1/2}||^2 both sides of the equivalence sit on
    // the boundary: alpha* B - A is singular PSD and sqrt(alpha*) equals the norm.
    InequalityEntry e;
    e.id = "lemma2.2-iii";
    e.statement = "A <= alpha B iff ||A^1/2 B^-1/2|| <= alpha^1/2 (boundary check)";
    e.form = EntryForm::Norm;
    e.evaluate = [](const EvalInput& in) {
      const HM b_inv_half = power(in.B, -0.5, in);
      const double s = spectral_norm(power(in.A, 0.5, in).matrix() * b_inv_half.matrix(), in.eig);
      const double alpha_star = s * s;
      const HM scaled = in.B * (alpha_star * in.rhs_scale);
      const double order_gap = loewner_gap(in.A, scaled, in.eig);
      const double alpha_max = eigh(congruence(b_inv_half.matrix(), in.A), in.eig).max();
      const double norm_gap = std::sqrt(alpha_max) * std::sqrt(in.rhs_scale) - s;
      return Evaluation{op_norm(in.A, in.eig), op_norm(scaled, in.eig), std::min(order_gap, norm_gap)};
    };
    out.push_back(std::move(e));
  }

  {
    InequalityEntry e;
    e.id = "lemma2.3";
    e.statement = "2r(A^-1 nabla B^-1 - A^-1 # B^-1) + K^r1(sqrt h') A^-1 #_nu B^-1 <= A^-1 nabla_nu B^-1";
    e.constant = "lemma2.3";
    e.hypothesis = HypothesisSet::Sandwich;
    e.uses_nu = true;
    e.evaluate = [](const EvalInput& in) {
      const double nu = in.params.nu;
      const double r = weights(nu).r;
      const HM ai = inverse(in.A, in.eig);
      const HM bi = inverse(in.B, in.eig);
      const HM defect = arithmetic_mean(ai, bi, 0.5) - gmean(ai, bi, 0.5, in);
      const HM lhs = defect * (2.0 * r) + gmean(ai, bi, nu, in) * constant_value("lemma2.3", in);
      return loewner(lhs, arithmetic_mean(ai, bi, nu), in);
    };
    out.push_back(std::move(e));
  }
  {
    InequalityEntry e;
    e.id = "scalar-lemma";
    e.statement = "2r((1+x)/2 - sqrt x) + K^r1(sqrt x) x^nu <= (1-nu) + nu x on spec(A^1/2 B^-1 A^1/2)";
    e.hypothesis = HypothesisSet::Sandwich;
    e.form = EntryForm::Norm;
    e.uses_nu = true;
    e.evaluate = [](const EvalInput& in) {
      const HM a_half = power(in.A, 0.5, in);
      const auto spectrum = eigh(congruence(a_half.matrix(), inverse(in.B, in.eig)), in.eig);
      const double nu = in.params.nu;
      Evaluation worst{0.0, 0.0, std::numeric_limits<double>::infinity()};
      for (Index i = 0; i < spectrum.dim(); ++i) {
        const double x = spectrum.eigenvalues(i);
        const double rhs = ((1.0 - nu) + nu * x) * in.rhs_scale;
        const double gap = scalar_lemma_gap(x, nu) - ((1.0 - nu) + nu * x) * (1.0 - in.rhs_scale);
        if (gap < worst.gap) worst = {rhs - gap, rhs, gap};
      }
      return worst;
    };
    out.push_back(std::move(e));
  }

  const std::vector<PowerSpec> power_specs{
      {"lin-sq", Lhs::HalfMean, "lin-sq", "K^2(h)", false, 2.0, {}},
      {"lin-p", Lhs::HalfMean, "lin-p", "K^p(h)", true, 1.0, {0.5, 2.0}},
      {"thm1.1", Lhs::HalfMean, "thm1.1", "((M+m)^2/(4^(2/p) Mm))^p", true, 1.0, {2.0, 3.5}},
      {"thm1.2", Lhs::Bracket, "thm1.2", "max(K(h), (M+m)^2/(4^(2/p) Mm))^p", true, 1.0, {0.5, 2.0, 3.5}},
      {"thm1.3", Lhs::WeightedMean, "thm1.3", "(K(h)/(4^(2/p-1) K^r(h')))^p", true, 1.0, {2.0, 3.5}},
      {"thm2.4", Lhs::Bracket, "thm2.4", "(K(h)/K^r1(sqrt h'))^2", false, 2.0, {}},
      {"cor2.6", Lhs::Bracket, "cor2.6", "(K(h)/K^r1(sqrt h'))^p", true, 1.0, {0.5, 2.0}},
      {"thm2.7", Lhs::Bracket, "thm2.7", "(K(h)/(4^(2/p-1) K^r1(sqrt h')))^p", true, 1.0, {2.0, 3.5}},
      {"zhang", Lhs::HalfMean, "zhang", "(K(h)(M^2+m^2)/(4^(2/p) Mm))^p", true, 1.0, {4.0, 5.5}},
      {"ywz", Lhs::WeightedMean, "ywz", "(K(h)(M^2+m^2)/(4^(2/p) Mm K^r(h')))^p", true, 1.0, {4.0, 5.5}},
      {"thm2.9", Lhs::Bracket, "thm2.9", "(K(h)(M^2+m^2)/(4^(2/p) Mm K^r(h')))^p", true, 1.0, {4.0, 5.5}},
      {"thm2.9-proof", Lhs::Bracket, "thm2.9-proof", "(K(h)(M^2+m^2)/(4^(2/p) Mm K^r1(sqrt h')))^p", true, 1.0,
       {4.0, 5.5}},
      {"thm2.10", Lhs::Bracket, "thm2.10",
       "(K^(-r1 alpha/2)(sqrt h') K^(alpha/2)(h) (M^alpha+m^alpha))^(2p/alpha) / (16 M^p m^p)", true, 1.0,
       {0.0, 1.5}, true},
  };
  for (const auto& spec : power_specs) {
    for (bool inside : {true, false}) {
      auto e = power_entry(spec, inside);
      e.asserted = spec.base != "thm2.9-proof";
      out.push_back(std::move(e));
    }
  }

  {
    InequalityEntry e;
    e.id = "norm-refinement";
    e.statement = "||Phi^p(A nabla_nu B)|| <= ||Phi^p(bracket(A, B))||";
    e.form = EntryForm::Norm;
    e.uses_map = true;
    e.uses_nu = true;
    e.uses_p = true;
    e.p_domain = kPositive;
    e.p_grid = {2.0, 3.5};
    e.evaluate = [](const EvalInput& in) {
      const double p = in.params.p;
      const double lhs = op_norm(power(phi(in, arithmetic_mean(in.A, in.B, in.params.nu)), p, in), in.eig);
      const double rhs = op_norm(power(phi(in, lhs_mean(Lhs::Bracket, in)), p, in), in.eig);
      return scalars(lhs, rhs, in);
    };
    out.push_back(std::move(e));
  }

  for (bool weighted : {false, true}) {
    InequalityEntry e;
    e.id = weighted ? "ando" : "ando-half";
    e.statement = weighted ? "Phi(A #_nu B) <= Phi(A) #_nu Phi(B)" : "Phi(A # B) <= Phi(A) # Phi(B)";
    e.uses_map = true;
    e.uses_nu = weighted;
    e.evaluate = [](const EvalInput& in) {
      const double nu = in.params.nu;
      return loewner(phi(in, gmean(in.A, in.B, nu, in)), gmean(phi(in, in.A), phi(in, in.B), nu, in), in);
    };
    out.push_back(std::move(e));
  }

  out.push_back(reverse_ando_entry("lee", "lee", false,
                                   "Phi(A) # Phi(B) <= (M+m)/(2 sqrt(Mm)) Phi(A # B), m, M squared ratios"));
  {
    auto e = reverse_ando_entry("lee-printed", "lee-printed", false,
                                "Phi(A) # Phi(B) <= (sqrt M + sqrt m)/(2 sqrt(Mm)) Phi(A # B), m = m2/M1, M = M2/m1");
    e.asserted = false;
    out.push_back(std::move(e));
  }
  out.push_back(reverse_ando_entry("seo", "seo", true, "Phi(A) #_nu Phi(B) <= K(m,M,nu)^-1 Phi(A #_nu B)"));
  out.push_back(reverse_ando_entry("thm3.4", "thm3.4", true,
                                   "Phi(A) #_nu Phi(B) <= K(m,M,nu)^-1 K(h)^-r Phi(A #_nu B), separated spectra"));

  out.push_back(young_entry("thm3.3-hprime", "thm3.3-hprime", true, "K^r(h') A #_nu B <= A nabla_nu B"));
  out.push_back(young_entry("thm3.3-h", "thm3.3-h", false, "K^r(h) A #_nu B <= A nabla_nu B (outer ratio)"));

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

const std::vector<InequalityEntry>& entries() {
  static const std::vector<InequalityEntry> all = build_registry();
  return all;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

constexpr std::array<RefinementClaim, 5> kClaims{{
    {"thm2.7", "thm1.1"},
    {"thm2.9", "zhang"},
    {"thm3.4", "seo"},
    {"thm2.4", "lin-sq"},
    {"thm1.3", "thm1.1"},
}};

}  // namespace

std::span<const InequalityEntry> registry() { return entries(); }

const InequalityEntry& find_entry(std::string_view id) {
  if (id == "scalar_lemma") id = "scalar-lemma";
  for (const auto& e : entries())
    if (e.id == id) return e;
  throw Error(Errc::UnknownInequality, "unknown inequality id '" + std::string(id) + "'");
}

std::vector<double> default_p_values(const InequalityEntry& entry, double alpha) {
  if (!entry.uses_p) return {entry.fixed_p};
  std::vector<double> out = entry.p_grid;
  if (entry.p_grid_from_2alpha)
    for (auto& p : out) p += 2.0 * alpha;
  return out;
}

CaseParams effective_params(const InequalityEntry& entry, CaseParams params) {
  if (!entry.uses_nu) params.nu = entry.fixed_nu;
  if (!entry.uses_p) params.p = entry.fixed_p;
  if (!entry.uses_alpha) params.alpha = 1.0;
  return params;
}

void check_entry_hypotheses(const InequalityEntry& entry, const SandwichBounds& bounds, const CaseParams& raw) {
  const CaseParams params = effective_params(entry, raw);
  bounds.validate();
  if (!satisfies(bounds, entry.hypothesis))
    throw Error(Errc::HypothesisNotMet, entry.id + " requires " + std::string(to_string(entry.hypothesis)) +
                                            " bounds, got " + std::string(to_string(bounds.kind)));
  if (!(params.nu >= 0.0 && params.nu <= 1.0))
    throw Error(Errc::HypothesisNotMet, entry.id + " requires 0 <= nu <= 1, got nu=" + fmt(params.nu));
  if (entry.uses_alpha && !(params.alpha >= entry.alpha_lo && params.alpha <= entry.alpha_hi))
    throw Error(Errc::HypothesisNotMet, entry.id + " requires alpha in [" + fmt(entry.alpha_lo) + ", " +
                                            fmt(entry.alpha_hi) + "], got alpha=" + fmt(params.alpha));
  if (entry.uses_p && entry.p_domain && !entry.p_domain->contains(params.p, params.alpha))
    throw Error(Errc::HypothesisNotMet,
                entry.id + " requires " + entry.p_domain->describe() + ", got p=" + fmt(params.p));
  if (!entry.constant.empty()) check_hypotheses(constant_family(entry.constant), bounds, params);
}

std::span<const RefinementClaim> refinement_claims() { return kClaims; }

}  // namespace opineq
