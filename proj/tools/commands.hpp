#pragma once

// Subcommands of the `ics` tool. Kept out of main() so tests can drive them
// with captured streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace ics::cli {

enum ExitCode : int { ok = 0, usage = 1, io = 2, invalid_data = 3 };

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ics::cli
