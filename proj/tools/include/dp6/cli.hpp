#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dp6::cli {

enum ExitCode : int { ok = 0, check_failed = 1, input_error = 2 };

/// Runs `dp6 <args...>` (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dp6::cli
