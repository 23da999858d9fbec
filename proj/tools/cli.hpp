#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opineq {

/// args excludes the program name. Exit codes: 0 all checks passed, 1 an
/// asserted verdict failed, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opineq
