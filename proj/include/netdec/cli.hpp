#pragma once

#include <iosfwd>

namespace netdec {

/// Exit codes of the command-line interface.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  ///< verification mismatch or validation failure
  kExitUsage = 2,
  kExitParseError = 3,
  kExitSizeGuard = 4,
};

/// Runs one CLI invocation against the given streams. argv[0] is the program
/// name; subcommands: analyze, maxflow, cuts, jump, potential, verify,
/// export-dot.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace netdec
