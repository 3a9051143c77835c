#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbitpoly {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitViolation = 2 };

/// Runs one command. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitpoly
