#include "opineq/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "opineq/error.hpp"

namespace opineq {

namespace {

// a is at least as permissive as b.
bool contains(HypothesisSet a, HypothesisSet b) {
  using H = HypothesisSet;
  if (a == b || a == H::None) return true;
  switch (a) {
    case H::Common: return b == H::Sandwich || b == H::SandwichALow;
    case H::Sandwich: return b == H::SandwichALow;
    case H::ReverseAndo: return b == H::ReverseAndoSeparated;
    default: return false;
  }
}

}  // namespace

void gate_case(const InequalityCase& c, const CheckOptions& opts) {
  const auto& entry = find_entry(c.ineq_id);
  check_entry_hypotheses(entry, c.instance.bounds, c.params);
  if (c.instance.A.dim() != c.instance.n || c.instance.B.dim() != c.instance.n)
    throw Error(Errc::DimensionMismatch, "instance matrices do not match n");
  if (c.phi.n != c.instance.n) {
    std::ostringstream os;
    os << "map expects dimension " << c.phi.n << ", instance has n=" << c.instance.n;
    throw Error(Errc::DimensionMismatch, os.str());
  }
  c.phi.validate();
  verify_instance(c.instance, opts.eig);
}

Verdict check_case(const InequalityCase& c, const CheckOptions& opts) {
  gate_case(c, opts);
  const auto& entry = find_entry(c.ineq_id);
  const CaseParams params = effective_params(entry, c.params);
  const EvalInput input{c.instance.A, c.instance.B, c.instance.bounds, c.phi, params, opts.eig, opts.rhs_scale};
  const Evaluation ev = entry.evaluate(input);

  Verdict v;
  v.ineq_id = entry.id;
  v.lhs_norm = ev.lhs_norm;
  v.rhs_norm = ev.rhs_norm;
  v.gap = ev.gap;
  v.relative_gap = ev.gap / (1.0 + std::abs(ev.rhs_norm));
  v.holds = v.relative_gap >= -opts.tol;
  v.asserted = entry.asserted;
  v.seed = c.instance.seed;
  v.n = c.instance.n;
  v.map = std::string(to_string(c.phi.kind));
  v.params = params;
  return v;
}

double scalar_lemma_gap(double x, double nu) {
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << "scalar lemma needs x > 0, got " << x;
    throw Error(Errc::NonPositiveArgument, os.str());
  }
  const auto [r, r1] = weights(nu);
  const double root = std::sqrt(x);
  const double rhs = (1.0 - nu) + nu * x;
  const double lhs = 2.0 * r * ((1.0 + x) / 2.0 - root) + std::pow(kantorovich(root), r1) * std::pow(x, nu);
  return rhs - lhs;
}

FCheckReport scalar_F_check(double m, double M, double nu, int grid_size) {
  if (grid_size < 3) throw Error(Errc::ConfigInvalid, "scalar_F_check needs grid_size >= 3");
  if (!(nu > 0.0 && nu < 1.0)) throw Error(Errc::WeightOutOfRange, "scalar_F_check needs 0 < nu < 1");
  const auto g = generalized_kantorovich(m, M, nu);
  const auto F = [&](double t) { return nu * std::pow(t, 1.0 - nu) + (1.0 - nu) * g.lambda0 * std::pow(t, -nu); };

  FCheckReport report;
  report.mu0 = g.mu0;
  report.lambda0 = g.lambda0;
  report.max_value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_size; ++i) {
    const double t = i == grid_size - 1 ? M : m + (M - m) * static_cast<double>(i) / (grid_size - 1);
    report.max_value = std::max(report.max_value, F(t));
  }
  report.max_residual = std::abs(report.max_value - g.mu0);
  report.residual_at_m = std::abs(F(m) - g.mu0);
  report.residual_at_M = std::abs(F(M) - g.mu0);
  const double tol = 1e-9 * (1.0 + g.mu0);
  report.pass = report.max_residual <= tol && report.residual_at_m <= tol && report.residual_at_M <= tol;
  return report;
}

double compare_constants(std::string_view id_a, std::string_view id_b, const SandwichBounds& bounds,
                         const CaseParams& params) {
  const auto& fa = constant_family(id_a);
  const auto& fb = constant_family(id_b);
  if (!contains(fa.hypothesis, fb.hypothesis) && !contains(fb.hypothesis, fa.hypothesis))
    throw Error(Errc::IncompatibleEntries, std::string(fa.name) + " (" + std::string(to_string(fa.hypothesis)) +
                                               ") and " + std::string(fb.name) + " (" +
                                               std::string(to_string(fb.hypothesis)) + ") share no hypothesis set");
  return bound_constant(id_a, bounds, params) / bound_constant(id_b, bounds, params);
}

Json to_json(const CaseParams& params) {
  Json doc;
  doc["nu"] = params.nu;
  doc["p"] = params.p;
  doc["alpha"] = params.alpha;
  return doc;
}

CaseParams params_from_json(const Json& doc) {
  CaseParams p;
  p.nu = doc.value("nu", p.nu);
  p.p = doc.value("p", p.p);
  p.alpha = doc.value("alpha", p.alpha);
  return p;
}

Json to_json(const InequalityCase& c) {
  Json doc;
  doc["id"] = c.ineq_id;
  doc["params"] = to_json(c.params);
  doc["map"] = to_json(c.phi);
  doc["instance"] = to_json(c.instance);
  return doc;
}

InequalityCase case_from_json(const Json& doc) {
  try {
    InequalityCase c;
    c.ineq_id = doc.at("id").get<std::string>();
    c.params = params_from_json(doc.at("params"));
    c.phi = map_from_json(doc.at("map"));
    c.instance = instance_from_json(doc.at("instance"));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("case: ") + e.what());
  }
}

}  // namespace opineq
