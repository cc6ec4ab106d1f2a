#pragma once

#include <iosfwd>

namespace eigconf::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kDisagreement = 3,
};

/// Entry point for the `ecconf` tool; writes JSON to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eigconf::cli
