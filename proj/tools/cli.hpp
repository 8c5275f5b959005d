#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace machh::cli {

/// Exit codes of the machh tool.
enum ExitCode : int {
  kOk = 0,
  kHypothesisFailed = 1,
  kUsageError = 2,
  kResourceLimit = 3,
  kGhostVertex = 4,
  kMismatch = 5,
};

/// Runs the tool on `args` (without the program name). Results go to `out`
/// unless --out names a file; diagnostics are single JSON lines on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace machh::cli
