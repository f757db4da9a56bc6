#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kComputationError = 2,
  kVerifyFailure = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghg::cli
