#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubcalc::cli {

/// Exit codes of `run`.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kInternalError = 3,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubcalc::cli
