#include "opineq/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace opineq {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

Json to_json(const CaseRecord& r) {
  Json doc;
  doc["id"] = r.id;
  doc["trial"] = r.trial;
  doc["seed"] = r.seed;
  doc["n"] = r.n;
  doc["map"] = r.map;
  doc["params"] = to_json(r.params);
  doc["lhs_norm"] = r.lhs_norm;
  doc["rhs_norm"] = r.rhs_norm;
  doc["gap"] = r.gap;
  doc["relative_gap"] = r.relative_gap;
  doc["holds"] = r.holds;
  doc["asserted"] = r.asserted;
  if (!r.error.empty()) doc["error"] = r.error;
  return doc;
}

Json to_json(const Report& report) {
  Json doc;
  doc["config_hash"] = hex64(report.config_hash);
  doc["config"] = report.config;
  Json summary = Json::array();
  for (const auto& s : report.summary) {
    Json row;
    row["id"] = s.id;
    row["trials"] = s.trials;
    row["failures"] = s.failures;
    row["worst_relative_gap"] = s.worst_relative_gap;
    row["asserted"] = s.asserted;
    summary.push_back(std::move(row));
  }
  doc["summary"] = std::move(summary);
  Json cases = Json::array();
  for (const auto& c : report.cases) cases.push_back(to_json(c));
  doc["cases"] = std::move(cases);
  doc["failures"] = report.failure_dumps;
  return doc;
}

std::string to_csv(const Report& report) {
  std::string out = "id,seed,n,nu,p,alpha,map,gap,relative_gap,holds\n";
  for (const auto& c : report.cases) {
    out += c.id;
    out += ',' + std::to_string(c.seed);
    out += ',' + std::to_string(c.n);
    out += ',' + format_double(c.params.nu);
    out += ',' + format_double(c.params.p);
    out += ',' + format_double(c.params.alpha);
    out += ',' + c.map;
    out += ',' + format_double(c.gap);
    out += ',' + format_double(c.relative_gap);
    out += c.holds ? ",true\n" : ",false\n";
  }
  return out;
}

}  // namespace opineq
