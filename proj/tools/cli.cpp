#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "opineq/error.hpp"
#include "opineq/report.hpp"
#include "opineq/search.hpp"
#include "opineq/suite.hpp"

namespace opineq {

namespace {

struct Options {
  std::vector<std::string> ids;
  std::vector<Index> dims{2, 3, 5};
  int trials = 100;
  std::uint64_t seed = 42;
  double m = 1.0, mp = 1.5, Mp = 2.0, M = 4.0;
  std::optional<double> m1, M1, m2, M2;
  bool a_low = false;
  std::vector<double> nu, p, alpha;
  double tol = kVerdictTolerance;
  bool force_endpoints = false;
  std::string out;
  std::string format = "json";
  unsigned threads = 0;
  std::string a, b;
  int budget = 2000;
  std::string kind = "common";
  std::string file;
};

bool bounds_given(const CLI::App& sub) {
  for (const char* name : {"--m", "--mp", "--Mp", "--M", "--m1", "--M1", "--m2", "--M2", "--a-low"})
    if (sub.get_option_no_throw(name) && sub.count(name) > 0) return true;
  return false;
}

FixedBounds fixed_bounds(const Options& o) {
  FixedBounds b;
  b.m = o.m, b.mp = o.mp, b.Mp = o.Mp, b.M = o.M;
  b.m1 = o.m1, b.M1 = o.M1, b.m2 = o.m2, b.M2 = o.M2;
  b.a_low = o.a_low;
  return b;
}

void add_bounds(CLI::App& sub, Options& o) {
  sub.add_option("--m", o.m, "lower outer bound m")->capture_default_str();
  sub.add_option("--mp", o.mp, "inner bound m' (sandwich)")->capture_default_str();
  sub.add_option("--Mp", o.Mp, "inner bound M' (sandwich)")->capture_default_str();
  sub.add_option("--M", o.M, "upper outer bound M")->capture_default_str();
  sub.add_option("--m1", o.m1, "reverse-Ando: m1^2 <= A (default sqrt(m))");
  sub.add_option("--M1", o.M1, "reverse-Ando: A <= M1^2 (default sqrt(m))");
  sub.add_option("--m2", o.m2, "reverse-Ando: m2^2 <= B (default sqrt(M))");
  sub.add_option("--M2", o.M2, "reverse-Ando: B <= M2^2 (default sqrt(M))");
  sub.add_flag("--a-low", o.a_low, "sandwich entries place A in the low interval");
}

void add_grids(CLI::App& sub, Options& o) {
  sub.add_option("--nu", o.nu, "nu values (default 0,0.1,...,1)")->delimiter(',');
  sub.add_option("--p", o.p, "p values (default: per inequality)")->delimiter(',');
  sub.add_option("--alpha", o.alpha, "alpha values (default 1,1.25,1.5,2)")->delimiter(',');
}

void add_output(CLI::App& sub, Options& o, const std::string& default_out) {
  sub.add_option("--out", o.out, "report path, '-' for stdout")->default_str(default_out);
  sub.add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub.add_option("--threads", o.threads, "worker threads, 0 = all cores (results do not depend on it)")
      ->capture_default_str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ConfigInvalid, "cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error(Errc::ConfigInvalid, "failed writing '" + path + "'");
}

std::string render(const Report& report, const std::string& format) {
  return format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
}

void print_summary(const Report& report, std::ostream& os) {
  for (const auto& s : report.summary) {
    const char* tag = s.failures == 0 ? "PASS" : (s.asserted ? "FAIL" : "INFO");
    os << std::left << std::setw(5) << tag << std::setw(26) << s.id << std::right << std::setw(6) << s.trials
       << " cases  " << std::setw(5) << s.failures << " failed  worst relative gap "
       << format_double(s.worst_relative_gap) << "\n";
  }
}

int finish_suite(const Report& report, const Options& o, std::ostream& out) {
  if (o.out != "-") print_summary(report, out);
  write_text(o.out, render(report, o.format), out);
  if (o.out != "-") out << "report: " << o.out << " (config " << hex64(report.config_hash) << ")\n";
  return report.asserted_ok() ? 0 : 1;
}

int cmd_verify(const Options& o, const CLI::App& sub, std::ostream& out) {
  SuiteConfig config;
  config.ids = o.ids;
  config.dims = o.dims;
  config.trials = o.trials;
  config.seed = o.seed;
  if (!o.nu.empty()) config.nu_grid = o.nu;
  if (!o.alpha.empty()) config.alpha_grid = o.alpha;
  config.p_grid = o.p;
  if (bounds_given(sub)) config.bounds = fixed_bounds(o);
  config.endpoints = o.force_endpoints ? EndpointMode::Always : EndpointMode::Never;
  config.tol = o.tol;
  config.threads = o.threads;
  return finish_suite(run_suite(config), o, out);
}

int cmd_selftest(const Options& o, std::ostream& out) {
  SuiteConfig config = selftest_config(o.seed);
  config.threads = o.threads;
  if (o.force_endpoints) config.endpoints = EndpointMode::Always;
  return finish_suite(run_suite(config), o, out);
}

int cmd_compare(const Options& o, std::ostream& out) {
  const auto& fa = constant_family(o.a);
  const auto& fb = constant_family(o.b);
  const FixedBounds fixed = fixed_bounds(o);
  SandwichBounds bounds = fixed.for_hypothesis(fa.hypothesis);
  if (!satisfies(bounds, fb.hypothesis)) bounds = fixed.for_hypothesis(fb.hypothesis);
  CaseParams params;
  params.nu = o.nu.empty() ? 0.5 : o.nu.front();
  params.p = o.p.empty() ? 2.0 : o.p.front();
  params.alpha = o.alpha.empty() ? 1.0 : o.alpha.front();
  out << format_double(compare_constants(o.a, o.b, bounds, params)) << "\n";
  return 0;
}

int cmd_search(const Options& o, std::ostream& out) {
  if (o.ids.size() != 1) throw Error(Errc::ConfigInvalid, "search takes exactly one --ineq id");
  SearchOptions so;
  so.n = o.dims.empty() ? 3 : o.dims.front();
  if (!o.nu.empty()) so.nu = o.nu.front();
  so.tol = o.tol;
  const SearchRecord rec = tightness_search(o.ids.front(), o.budget, o.seed, so);
  out << rec.ineq_id << ": best relative gap " << format_double(rec.best_relative_gap) << " after "
      << rec.evaluations << " evaluations (" << rec.restarts << " restarts)";
  if (rec.violation_found) out << (rec.violation_confirmed ? ", violation confirmed" : ", violation not confirmed");
  out << "\n";
  if (!o.out.empty()) write_text(o.out, to_json(rec).dump(2) + "\n", out);
  return rec.violation_confirmed && find_entry(rec.ineq_id).asserted ? 1 : 0;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const FixedBounds fixed = fixed_bounds(o);
  const BoundsKind kind = bounds_kind_from_string(o.kind);
  SandwichBounds bounds;
  switch (kind) {
    case BoundsKind::Common: bounds = fixed.for_hypothesis(HypothesisSet::Common); break;
    case BoundsKind::SandwichBLow: bounds = SandwichBounds::sandwich_b_low(o.m, o.mp, o.Mp, o.M); break;
    case BoundsKind::SandwichALow: bounds = SandwichBounds::sandwich_a_low(o.m, o.mp, o.Mp, o.M); break;
    case BoundsKind::ReverseAndo: bounds = fixed.for_hypothesis(HypothesisSet::ReverseAndo); break;
  }
  const int count = std::max(o.trials, 1);
  Json docs = Json::array();
  for (Index n : o.dims)
    for (int t = 0; t < count; ++t) {
      const std::uint64_t seed = count == 1 && o.dims.size() == 1 ? o.seed : derive_seed(derive_seed(o.seed, n), t);
      docs.push_back(to_json(sample_instance(bounds, n, seed, o.force_endpoints)));
    }
  const Json doc = docs.size() == 1 ? docs.front() : docs;
  write_text(o.out.empty() ? "-" : o.out, doc.dump(2) + "\n", out);
  return 0;
}

int cmd_replay(const Options& o, std::ostream& out) {
  std::ifstream f(o.file);
  if (!f) throw Error(Errc::ConfigInvalid, "cannot open '" + o.file + "'");
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  std::vector<Json> cases;
  if (doc.is_object() && doc.contains("failures")) {
    for (const auto& c : doc.at("failures")) cases.push_back(c);
  } else if (doc.is_array()) {
    for (const auto& c : doc) cases.push_back(c);
  } else {
    cases.push_back(doc);
  }
  CheckOptions opts;
  opts.tol = o.tol;
  int failed = 0;
  for (const auto& c : cases) {
    const Verdict v = check_case(case_from_json(c), opts);
    out << (v.holds ? "PASS " : (v.asserted ? "FAIL " : "INFO ")) << v.ineq_id << " seed " << v.seed << " n " << v.n
        << " map " << v.map << " gap " << format_double(v.gap) << " relative " << format_double(v.relative_gap)
        << "\n";
    if (!v.holds && v.asserted) ++failed;
  }
  out << cases.size() << " case(s), " << failed << " asserted failure(s)\n";
  return failed == 0 ? 0 : 1;
}

std::string registry_listing() {
  std::ostringstream os;
  os << "\nInequality ids (--ineq):\n";
  for (const auto& e : registry())
    os << "  " << std::left << std::setw(26) << e.id << (e.asserted ? "" : "[info] ") << e.statement << "\n";
  os << "\nExit codes: 0 all checks passed, 1 an asserted check failed, 2 usage or configuration error.\n";
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of operator mean inequalities under positive unital maps", "opineq"};
  app.footer(registry_listing());
  app.require_subcommand(1);

  Options o;
  auto* selftest = app.add_subcommand("selftest", "run the built-in acceptance configuration");
  selftest->add_option("--seed", o.seed, "master seed")->capture_default_str();
  selftest->add_flag("--force-endpoints", o.force_endpoints, "force interval endpoints in every trial");
  add_output(*selftest, o, "opineq-selftest.json");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--ineq", o.ids, "inequality ids (default: all)")->delimiter(',');
  verify->add_option("--n", o.dims, "dimensions")->delimiter(',')->capture_default_str();
  verify->add_option("--trials", o.trials, "trials per (id, n)")->capture_default_str();
  verify->add_option("--seed", o.seed, "master seed")->capture_default_str();
  add_bounds(*verify, o);
  add_grids(*verify, o);
  verify->add_option("--tol", o.tol, "relative gap tolerance")->capture_default_str();
  verify->add_flag("--force-endpoints", o.force_endpoints, "put eigenvalues on the interval ends");
  add_output(*verify, o, "opineq-report.json");

  auto* compare = app.add_subcommand("compare", "print the ratio of two bound constants");
  compare->add_option("--a", o.a, "numerator id")->required();
  compare->add_option("--b", o.b, "denominator id")->required();
  add_bounds(*compare, o);
  add_grids(*compare, o);

  auto* search = app.add_subcommand("search", "randomized tightness search for one inequality");
  search->add_option("--ineq", o.ids, "inequality id")->required();
  search->add_option("--budget", o.budget, "number of evaluations")->capture_default_str();
  search->add_option("--seed", o.seed, "seed")->capture_default_str();
  search->add_option("--n", o.dims, "dimension (default 3)");
  search->add_option("--nu", o.nu, "pin nu");
  search->add_option("--tol", o.tol, "relative gap tolerance")->capture_default_str();
  search->add_option("--out", o.out, "write the search record as JSON");

  auto* gen = app.add_subcommand("gen", "emit sampled instances");
  gen->add_option("--kind", o.kind, "bounds kind")
      ->check(CLI::IsMember({"common", "sandwich_B_low", "sandwich_A_low", "reverse_ando"}))
      ->capture_default_str();
  gen->add_option("--n", o.dims, "dimensions")->delimiter(',');
  gen->add_option("--trials", o.trials, "instances per dimension");
  gen->add_option("--seed", o.seed, "seed")->capture_default_str();
  add_bounds(*gen, o);
  gen->add_flag("--force-endpoints", o.force_endpoints, "put eigenvalues on the interval ends");
  gen->add_option("--out", o.out, "output path (default stdout)");

  auto* replay = app.add_subcommand("replay", "re-check cases from a report or case file");
  replay->add_option("file", o.file, "report JSON (its failures are replayed) or case JSON")->required();
  replay->add_option("--tol", o.tol, "relative gap tolerance")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*selftest) {
      if (o.out.empty()) o.out = "opineq-selftest.json";
      return cmd_selftest(o, out);
    }
    if (*verify) {
      if (o.out.empty()) o.out = "opineq-report.json";
      return cmd_verify(o, *verify, out);
    }
    if (*compare) return cmd_compare(o, out);
    if (*search) {
      if (search->count("--n") == 0) o.dims = {3};
      return cmd_search(o, out);
    }
    if (*gen) {
      if (gen->count("--n") == 0) o.dims = {3};
      if (gen->count("--trials") == 0) o.trials = 1;
      return cmd_gen(o, out);
    }
    if (*replay) return cmd_replay(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace opineq
