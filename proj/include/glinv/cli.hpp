#ifndef GLINV_CLI_HPP
#define GLINV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace glinv {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInvalidInput = 2,
  kExitInternalError = 3,
};

/// Runs the glinv command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glinv

#endif  // GLINV_CLI_HPP
