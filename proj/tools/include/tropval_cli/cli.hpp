#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropval::cli {

/// Exit codes shared by every verb.
enum ExitCode : int { kPass = 0, kRefuted = 1, kUsage = 2, kPrecondition = 3 };

/// Runs one command. `args` excludes the program name. The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropval::cli
