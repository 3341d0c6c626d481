#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hdc::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kResourceCap = 3,
  kVerificationFailed = 4,
};

/// Runs one command line (without the program name). JSON goes to out or
/// the -o file, the human summary and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdc::cli
