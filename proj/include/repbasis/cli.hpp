#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repbasis::cli {

/// Runs the command line `args` (args[0] is the program name).
///
/// Returns 0 on success, 2 on invalid flags or input and 1 when an internal
/// invariant breaks. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repbasis::cli
