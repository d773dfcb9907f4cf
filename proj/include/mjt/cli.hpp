#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mjt::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationError = 1,
  kSolverError = 2,
  kIoError = 3,
};

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mjt::cli
