#pragma once

#include <iosfwd>
#include <string>

#include "opineq/suite.hpp"

namespace opineq {

Json to_json(const CaseRecord& record);
Json to_json(const Report& report);

/// One header line, then one row per case:
/// id,seed,n,nu,p,alpha,map,gap,relative_gap,holds
std::string to_csv(const Report& report);

/// Doubles printed in shortest round-trip form.
std::string format_double(double x);

std::string hex64(std::uint64_t x);

}  // namespace opineq
