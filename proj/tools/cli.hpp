#pragma once

#include <ostream>
#include <span>
#include <string>

namespace dashed::cli {

inline constexpr const char* kSchema = "dashed-report/1";

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

// Runs one command line (without the program name). The report goes to
// `out`, diagnostics to `err`; the return value is the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dashed::cli
