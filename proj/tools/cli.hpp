#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankone::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInvalidInput = 2,
  kVerificationFailure = 3,
};

/// Runs one invocation. `args` includes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rankone::cli
