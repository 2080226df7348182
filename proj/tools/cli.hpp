#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace census::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Parses argv-style arguments (args[0] is the program name), runs the
/// subcommand and writes its output. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace census::cli
