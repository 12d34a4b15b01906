#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropical::cli {

/// Exit codes of run_command.
enum Exit : int { kOk = 0, kFalse = 1, kInputError = 2 };

/// Runs one subcommand. args excludes the program name; "-" names the
/// standard input stream.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tropical::cli
