#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braid3 {

/// Runs one CLI invocation (argv without the program name). Writes results to
/// out and diagnostics to err. Exit codes: 0 success, 1 negative mathematical
/// verdict (non-conjugate pair, failed verification), 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braid3
