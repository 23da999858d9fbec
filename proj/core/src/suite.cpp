#include "opineq/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "opineq/error.hpp"
#include "opineq/rng.hpp"

namespace opineq {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::ConfigInvalid, what); }

std::vector<const InequalityEntry*> selected_entries(const SuiteConfig& config) {
  std::vector<const InequalityEntry*> out;
  if (config.ids.empty()) {
    for (const auto& e : registry()) out.push_back(&e);
    return out;
  }
  for (const auto& id : config.ids) out.push_back(&find_entry(id));
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CaseParams plan_params(const SuiteConfig& config, const InequalityEntry& entry, int trial) {
  const auto t = static_cast<std::size_t>(trial);
  CaseParams params;
  params.nu = config.nu_grid[t % config.nu_grid.size()];
  params.alpha = config.alpha_grid[(t / 2) % config.alpha_grid.size()];
  const std::vector<double> ps =
      entry.uses_p && !config.p_grid.empty() ? config.p_grid : default_p_values(entry, params.alpha);
  params.p = ps[(t / config.nu_grid.size()) % ps.size()];
  return effective_params(entry, params);
}

bool force_endpoints(EndpointMode mode, int trial) {
  switch (mode) {
    case EndpointMode::Never: return false;
    case EndpointMode::Always: return true;
    case EndpointMode::Alternate: return trial % 2 == 1;
  }
  return false;
}

struct Outcome {
  CaseRecord record;
  Json dump;  // null unless the case failed
};

Outcome run_one(const SuiteConfig& config, const InequalityEntry& entry, Index n, int trial) {
  Outcome out;
  CaseRecord& r = out.record;
  r.id = entry.id;
  r.n = n;
  r.trial = trial;
  r.asserted = entry.asserted;
  r.params = plan_params(config, entry, trial);
  std::optional<InequalityCase> c;
  try {
    c = plan_case(config, entry, n, trial);
    r.seed = c->instance.seed;
    r.map = std::string(to_string(c->phi.kind));
    CheckOptions opts;
    opts.tol = config.tol;
    opts.rhs_scale = config.rhs_scale;
    const Verdict v = check_case(*c, opts);
    r.lhs_norm = v.lhs_norm;
    r.rhs_norm = v.rhs_norm;
    r.gap = v.gap;
    r.relative_gap = v.relative_gap;
    r.holds = v.holds;
  } catch (const std::exception& e) {
    r.error = e.what();
    r.holds = false;
    r.gap = r.relative_gap = std::numeric_limits<double>::quiet_NaN();
  }
  if (!r.holds && c) out.dump = to_json(*c);
  return out;
}

}  // namespace

std::string_view to_string(EndpointMode mode) noexcept {
  switch (mode) {
    case EndpointMode::Never: return "never";
    case EndpointMode::Always: return "always";
    case EndpointMode::Alternate: return "alternate";
  }
  return "never";
}

SandwichBounds FixedBounds::for_hypothesis(HypothesisSet set) const {
  switch (set) {
    case HypothesisSet::None:
    case HypothesisSet::Common:
      return SandwichBounds::common(m, M);
    case HypothesisSet::Sandwich:
      return a_low ? SandwichBounds::sandwich_a_low(m, mp, Mp, M) : SandwichBounds::sandwich_b_low(m, mp, Mp, M);
    case HypothesisSet::SandwichALow:
      return SandwichBounds::sandwich_a_low(m, mp, Mp, M);
    case HypothesisSet::ReverseAndo:
    case HypothesisSet::ReverseAndoSeparated:
      return SandwichBounds::reverse_ando(m1.value_or(std::sqrt(m)), M1.value_or(std::sqrt(m)),
                                          m2.value_or(std::sqrt(M)), M2.value_or(std::sqrt(M)));
  }
  return SandwichBounds::common(m, M);
}

void SuiteConfig::validate() const {
  if (trials < 0) invalid("trials must be >= 0");
  if (dims.empty()) invalid("at least one dimension is required");
  for (Index n : dims)
    if (n < 1 || n > 64) invalid("dimensions must lie in [1, 64]");
  if (nu_grid.empty() || alpha_grid.empty()) invalid("nu and alpha grids must be non-empty");
  for (double nu : nu_grid)
    if (!(nu >= 0.0 && nu <= 1.0)) invalid("nu values must lie in [0, 1]");
  for (double a : alpha_grid)
    if (!std::isfinite(a)) invalid("alpha values must be finite");
  for (double p : p_grid)
    if (!std::isfinite(p)) invalid("p values must be finite");
  if (maps.empty()) invalid("at least one map kind is required");
  if (!(tol >= 0.0) || !std::isfinite(tol)) invalid("tolerance must be a finite value >= 0");
  if (!(rhs_scale > 0.0) || !std::isfinite(rhs_scale)) invalid("rhs scale must be positive");
  if (!(range.h_lo > 1.0 && range.h_lo <= range.h_hi && std::isfinite(range.h_hi)))
    invalid("bound ratio range needs 1 < h_lo <= h_hi");
  if (!(range.scale_lo > 0.0 && range.scale_lo <= range.scale_hi && std::isfinite(range.scale_hi)))
    invalid("bound scale range needs 0 < lo <= hi");
  if (failure_dump_limit < 0) invalid("failure dump limit must be >= 0");

  for (const auto* entry : selected_entries(*this)) {
    try {
      SplitMix64 rng(0);
      const SandwichBounds b = bounds ? bounds->for_hypothesis(entry->hypothesis) : draw_bounds(entry->hypothesis, rng, range);
      for (int t = 0; t < trials; ++t) check_entry_hypotheses(*entry, b, plan_params(*this, *entry, t));
    } catch (const Error& e) {
      invalid(e.what());
    }
  }
}

SuiteConfig selftest_config(std::uint64_t seed) {
  SuiteConfig c;
  c.seed = seed;
  c.endpoints = EndpointMode::Alternate;
  return c;
}

Json config_to_json(const SuiteConfig& config) {
  Json doc;
  Json ids = Json::array();
  for (const auto* e : selected_entries(config)) ids.push_back(e->id);
  doc["ids"] = std::move(ids);
  doc["dims"] = config.dims;
  doc["trials"] = config.trials;
  doc["seed"] = config.seed;
  doc["nu_grid"] = config.nu_grid;
  doc["p_grid"] = config.p_grid;
  doc["alpha_grid"] = config.alpha_grid;
  if (config.bounds) {
    const auto& b = *config.bounds;
    Json fb;
    fb["m"] = b.m, fb["mp"] = b.mp, fb["Mp"] = b.Mp, fb["M"] = b.M;
    const auto rev = b.for_hypothesis(HypothesisSet::ReverseAndo);
    fb["m1"] = rev.m1, fb["M1"] = rev.M1, fb["m2"] = rev.m2, fb["M2"] = rev.M2;
    fb["a_low"] = b.a_low;
    doc["bounds"] = std::move(fb);
  } else {
    doc["bounds"] = nullptr;
  }
  doc["range"] = {{"h_lo", config.range.h_lo},
                  {"h_hi", config.range.h_hi},
                  {"scale_lo", config.range.scale_lo},
                  {"scale_hi", config.range.scale_hi}};
  doc["endpoints"] = std::string(to_string(config.endpoints));
  Json maps = Json::array();
  for (MapKind k : config.maps) maps.push_back(std::string(to_string(k)));
  doc["maps"] = std::move(maps);
  doc["tol"] = config.tol;
  doc["rhs_scale"] = config.rhs_scale;
  doc["failure_dump_limit"] = config.failure_dump_limit;
  return doc;
}

InequalityCase plan_case(const SuiteConfig& config, const InequalityEntry& entry, Index n, int trial) {
  const std::uint64_t id_seed = derive_seed(config.seed, fnv1a64(entry.id));
  const std::uint64_t trial_seed =
      derive_seed(derive_seed(id_seed, static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(trial));
  SplitMix64 rng(trial_seed);
  const SandwichBounds bounds =
      config.bounds ? config.bounds->for_hypothesis(entry.hypothesis) : draw_bounds(entry.hypothesis, rng, config.range);

  InequalityCase c;
  c.ineq_id = entry.id;
  c.params = plan_params(config, entry, trial);
  c.instance = sample_instance(bounds, n, trial_seed, force_endpoints(config.endpoints, trial));
  const MapKind kind =
      entry.uses_map ? config.maps[static_cast<std::size_t>(trial) % config.maps.size()] : MapKind::Identity;
  c.phi = random_map(n, kind, derive_seed(trial_seed, 4));
  return c;
}

bool Report::asserted_ok() const noexcept {
  return std::none_of(summary.begin(), summary.end(), [](const auto& s) { return s.asserted && s.failures > 0; });
}

Report run_suite(const SuiteConfig& config) {
  config.validate();
  const auto entries = selected_entries(config);

  struct Job {
    const InequalityEntry* entry;
    Index n;
    int trial;
  };
  std::vector<Job> jobs;
  for (const auto* e : entries) {
    std::vector<Index> dims = config.dims;
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    for (Index n : dims)
      for (int t = 0; t < config.trials; ++t) jobs.push_back({e, n, t});
  }

  std::vector<Outcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      outcomes[i] = run_one(config, *jobs[i].entry, jobs[i].n, jobs[i].trial);
  };
  unsigned threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  Report report;
  report.config = config_to_json(config);
  report.config_hash = fnv1a64(report.config.dump());
  std::map<std::string, SummaryRow> rows;
  std::map<std::string, int> dumps;
  for (const auto* e : entries) {
    SummaryRow row;
    row.id = e->id;
    row.asserted = e->asserted;
    row.worst_relative_gap = std::numeric_limits<double>::quiet_NaN();
    rows.emplace(e->id, row);
  }
  for (auto& o : outcomes) {
    SummaryRow& row = rows.at(o.record.id);
    ++row.trials;
    if (!o.record.holds) ++row.failures;
    const double g = o.record.relative_gap;
    if (!std::isnan(g) && (std::isnan(row.worst_relative_gap) || g < row.worst_relative_gap))
      row.worst_relative_gap = g;
    if (!o.dump.is_null() && dumps[o.record.id]++ < config.failure_dump_limit)
      report.failure_dumps.push_back(std::move(o.dump));
    report.cases.push_back(std::move(o.record));
  }
  for (auto& [id, row] : rows) report.summary.push_back(row);
  return report;
}

}  // namespace opineq
