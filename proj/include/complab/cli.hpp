#pragma once

#include <iosfwd>

namespace complab {

/// Process exit codes of the command line tool.
enum ExitCode : int {
  kExitVerdict = 0,       // success; for classify, a verdict was reached
  kExitUsage = 1,         // bad flags, unknown algorithm, invalid instance
  kExitInconclusive = 2,  // an extremal or average fit stayed unresolved
  kExitInternal = 3,      // counter overflow or a failed internal check
};

/// Entry point of the `complab` tool: subcommands classify, run, search and
/// average. Reports go to `out` (or the --output file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace complab
