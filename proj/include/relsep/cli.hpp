#ifndef RELSEP_CLI_HPP
#define RELSEP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace relsep::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_separated = 0,
    exit_connected = 1,
    exit_error = 2,
    exit_disagree = 3,
};

/// Runs the command line given argv-style arguments (without the program
/// name). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relsep::cli

#endif
