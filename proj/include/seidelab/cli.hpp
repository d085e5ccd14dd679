#ifndef SEIDELAB_CLI_HPP
#define SEIDELAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace seidelab {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailure = 1,
  kExitInputError = 2,
  kExitNumericError = 3,
};

/// Environment variable overriding the default check tolerance (1e-6).
inline constexpr const char* kToleranceEnv = "SEIDELAB_TOLERANCE";

/**
 * Entry point of the `seidelab` tool: subcommands energy, verify and
 * constants. args[0] is the program name. Writes results to out and
 * diagnostics to err; returns an ExitCode.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace seidelab

#endif  // SEIDELAB_CLI_HPP
