#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailed = 2,
  kNumericFailure = 3,
};

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` (or to --output when given) only on success; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcc::cli
