#include "opineq/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "opineq/error.hpp"
#include "opineq/means.hpp"
#include "opineq/rng.hpp"

namespace opineq {

namespace {

struct Layout {
  Index n;
  bool nu, p, alpha;
  std::size_t size() const {
    return static_cast<std::size_t>(2 * n) + (nu ? 1 : 0) + (p ? 1 : 0) + (alpha ? 1 : 0);
  }
};

HermitianMatrix place(const CMatrix& basis, std::span<const double> unit, std::pair<double, double> interval) {
  RVector values(static_cast<Index>(unit.size()));
  for (Index i = 0; i < values.size(); ++i)
    values(i) = interval.first + unit[static_cast<std::size_t>(i)] * (interval.second - interval.first);
  const CMatrix d = values.cast<Complex>().asDiagonal();
  return HermitianMatrix::hermitian_part(basis * d * basis.adjoint());
}

CaseParams decode_params(const InequalityEntry& entry, const Layout& layout, const std::vector<double>& x,
                         const SearchOptions& opts) {
  std::size_t k = static_cast<std::size_t>(2 * layout.n);
  CaseParams params;
  if (opts.nu) params.nu = *opts.nu;
  if (layout.nu) params.nu = x[k++];
  const std::size_t p_slot = layout.p ? k++ : 0;
  if (layout.alpha) params.alpha = entry.alpha_lo + x[k++] * (std::min(entry.alpha_hi, 2.0) - entry.alpha_lo);
  if (layout.p) {
    const PDomain dom = entry.p_domain.value_or(PDomain{});
    double lo = dom.lo_times_alpha ? dom.lo * params.alpha : dom.lo;
    if (!dom.lo_inclusive) lo += 0.05;
    const double hi = std::min(dom.hi, lo + 4.0);
    params.p = lo + x[p_slot] * (hi - lo);
  }
  return effective_params(entry, params);
}

}  // namespace

SearchRecord tightness_search(std::string_view ineq_id, int budget, std::uint64_t seed, const SearchOptions& opts) {
  const auto& entry = find_entry(ineq_id);
  if (budget < 1) throw Error(Errc::ConfigInvalid, "search budget must be >= 1");
  if (opts.n < 1) throw Error(Errc::ConfigInvalid, "search dimension must be >= 1");
  if (opts.nu) check_weight(*opts.nu);

  const Layout layout{opts.n, entry.uses_nu && !opts.nu, entry.uses_p, entry.uses_alpha};
  CheckOptions check;
  check.eig = opts.eig;
  check.tol = opts.tol;

  SearchRecord rec;
  rec.ineq_id = entry.id;
  rec.best_relative_gap = std::numeric_limits<double>::infinity();
  rec.best_gap = std::numeric_limits<double>::infinity();

  while (rec.evaluations < budget) {
    const std::uint64_t rs = derive_seed(seed, static_cast<std::uint64_t>(rec.restarts));
    const bool commuting = rec.restarts % 2 == 0;
    ++rec.restarts;
    SplitMix64 rng(rs);
    const SandwichBounds bounds = draw_bounds(entry.hypothesis, rng, opts.range);
    const CMatrix ua = haar_unitary(opts.n, rng);
    const CMatrix ub = commuting ? ua : haar_unitary(opts.n, rng);
    const MapKind kind = opts.map ? *opts.map
                         : entry.uses_map ? map_catalog()[rng.below(map_catalog().size())]
                                          : MapKind::Identity;
    const MapSpec phi = random_map(opts.n, kind, derive_seed(rs, 5));

    std::vector<double> x(layout.size());
    for (auto& v : x) v = rng.uniform();

    const auto build = [&](const std::vector<double>& y) {
      InequalityCase c;
      c.ineq_id = entry.id;
      c.phi = phi;
      c.params = decode_params(entry, layout, y, opts);
      c.instance.bounds = bounds;
      c.instance.n = opts.n;
      c.instance.seed = rs;
      const auto nn = static_cast<std::size_t>(opts.n);
      c.instance.A = place(ua, std::span(y).subspan(0, nn), bounds.interval_a());
      c.instance.B = place(ub, std::span(y).subspan(nn, nn), bounds.interval_b());
      return c;
    };
    const auto evaluate = [&](const std::vector<double>& y) {
      ++rec.evaluations;
      try {
        const InequalityCase c = build(y);
        const Verdict v = check_case(c, check);
        if (v.relative_gap < rec.best_relative_gap) {
          rec.best_relative_gap = v.relative_gap;
          rec.best_gap = v.gap;
          rec.best_case = c;
          rec.parameters = {{"restart", rec.restarts - 1},
                            {"commuting", commuting},
                            {"map", std::string(to_string(kind))},
                            {"coordinates", y},
                            {"params", to_json(c.params)},
                            {"bounds", to_json(bounds)}};
        }
        return v.relative_gap;
      } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
      }
    };

    double current = evaluate(x);
    double step = 0.25;
    while (step > 1e-7 && rec.evaluations < budget) {
      bool improved = false;
      for (std::size_t i = 0; i < x.size() && rec.evaluations < budget; ++i) {
        for (double dir : {1.0, -1.0}) {
          std::vector<double> y = x;
          y[i] = std::clamp(x[i] + dir * step, 0.0, 1.0);
          if (y[i] == x[i] || rec.evaluations >= budget) continue;
          const double v = evaluate(y);
          if (v < current) {
            current = v;
            x = std::move(y);
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  }

  if (rec.best_relative_gap < -opts.tol) {
    rec.violation_found = true;
    CheckOptions strict = check;
    strict.eig = opts.eig.tightened(0.01);
    rec.violation_confirmed = !check_case(rec.best_case, strict).holds;
  }
  return rec;
}

Json to_json(const SearchRecord& r) {
  Json doc;
  doc["id"] = r.ineq_id;
  doc["evaluations"] = r.evaluations;
  doc["restarts"] = r.restarts;
  doc["best_gap"] = r.best_gap;
  doc["best_relative_gap"] = r.best_relative_gap;
  doc["violation_found"] = r.violation_found;
  doc["violation_confirmed"] = r.violation_confirmed;
  doc["parameters"] = r.parameters;
  if (!r.best_case.ineq_id.empty()) doc["case"] = to_json(r.best_case);
  return doc;
}

}  // namespace opineq
