#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace slicefock::cli {

/// Exit codes of the slicefock tool.
enum ExitCode : int {
  kOk = 0,
  /// Usage, parse or spec errors, and invalid arguments.
  kUsage = 1,
  /// The function is not in the requested Fock space.
  kNotInSpace = 2,
  /// Any other numerical failure (truncation, conditioning, solver).
  kNumerical = 3,
};

/// Runs one experiment and returns its table or report text.
std::string execute(const ExperimentConfig& config);

/// Full command line (args[0] is the program name). Results go to `out` or to the
/// --out file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicefock::cli
