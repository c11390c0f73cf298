#pragma once

#include <iosfwd>

namespace bullfree::cli {

enum ExitCode : int {
  kExitOk = 0,        // success, YES, pattern found
  kExitNo = 1,        // NO, absence, failed verification
  kExitUsage = 2,
  kExitParse = 3,     // unreadable or malformed input
  kExitCapacity = 4,
};

/// Entry point of the `bullfree` tool. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bullfree::cli
