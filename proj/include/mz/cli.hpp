#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mz {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitMismatch = 2, kExitCap = 3 };

// Runs the command-line tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mz
