#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clsfront::cli {

// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kDataError = 1, kUsageError = 2 };

// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clsfront::cli
