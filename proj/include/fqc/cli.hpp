#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fqc::cli {

/// Runs the command-line frontend on `args` (without the program name),
/// writing results to `out` and diagnostics to `err`.
///
/// Exit codes: 0 = success and every asserted bound holds; 1 = at least one
/// non-advisory bound violated; 2 = usage error, malformed input, cap
/// exceeded, or hypothesis violation (each with a distinct diagnostic).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqc::cli
