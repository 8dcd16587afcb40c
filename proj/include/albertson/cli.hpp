#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace albertson {

/// Exit codes of run_cli.
enum ExitCode : int {
  kExitOk = 0,
  kExitPrecondition = 1,  // bad parameter value or violated graph condition
  kExitUsage = 2,         // unknown subcommand/flag, I/O or format error
  kExitInternal = 3,
};

/**
 * Dispatches one command line (without the program name). Reports go to
 * `out`, diagnostics to `err`. See README.md for the subcommand grammar.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace albertson
