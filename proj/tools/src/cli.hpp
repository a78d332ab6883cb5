#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qshuffle {

/// Parses and runs one command. `args` excludes the program name. Reports go
/// to `out`; diagnostics, usage errors, and timings go to `err`.
/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
/// 3 refused by an enumeration cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qshuffle
