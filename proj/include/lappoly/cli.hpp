#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lappoly {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitInputError = 1, kExitCheckFailure = 2 };

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Reports go to out; usage text from --help also goes to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace lappoly
