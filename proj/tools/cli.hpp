#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conifold::cli {

enum ExitCode { kSuccess = 0, kError = 1, kIncomplete = 2 };

// Runs one command line (without the program name) and returns the exit
// code. All output goes to `out` / `err` unless a command writes a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conifold::cli
