#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcdperm::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

/// Runs the gcdperm command line; args excludes the program name.
/// GCDPERM_CACHE and GCDPERM_MAX_N supply defaults for --cache and --max-n.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcdperm::cli
