#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdinfer::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,  // not derivable, or proof invalid
  kUsage = 2,     // usage or parse error
  kLimit = 3,     // round or rule limit reached
};

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdinfer::cli
