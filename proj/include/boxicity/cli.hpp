#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boxicity::cli {

enum ExitCode : int { ok = 0, invalid_input = 1, verification_failed = 2, budget_exceeded = 3 };

/// Runs one command. `args` excludes the program name. The JSON result goes
/// to `out` (or to the --output file), diagnostics to `err`.
auto run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) -> int;

} // namespace boxicity::cli
