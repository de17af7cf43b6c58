#ifndef DISKCERT_CLI_HPP
#define DISKCERT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace diskcert {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitVerified = 0,
  kExitFailed = 1,
  kExitMalformed = 2,
};

/// Entry point of the `diskcert` tool. `args` excludes the program name.
/// Subcommands: certify, check, largeb, theorem, degennes, curves.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diskcert

#endif  // DISKCERT_CLI_HPP
