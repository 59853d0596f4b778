#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubepath::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kVerificationFailed = 3,
};

/// Runs one verb. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubepath::cli
