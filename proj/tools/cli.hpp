#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace altruns::cli {

/// Exit statuses of the altruns tool.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceCap = 3,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altruns::cli
