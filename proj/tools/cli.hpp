#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace awtk::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyViolated = 1,
  kInvalidInput = 2,
  kTimeout = 3,
};

/// Parse `args` (without the program name), run the subcommand, and return
/// its exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace awtk::cli
