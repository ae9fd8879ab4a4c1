#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rectwalg {

/// Command-line driver.  Exit codes: 0 all checks pass, 1 a check or
/// assertion failed (witness included in the report), 2 invalid parameters
/// or input (the violated constraint is named on the error stream).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rectwalg
