#pragma once

#include <string>
#include <vector>

namespace mcc::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kUnsupportedRange = 3,
};

struct CliResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Runs the motivic-cc command line in-process; args exclude the program name.
CliResult run(const std::vector<std::string>& args);

/// Largest accepted truncation order (MOTIVIC_CC_MAX_ORDER, default 12).
std::size_t max_order();

}  // namespace mcc::cli
