#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icode {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  exit_ok = 0,
  exit_input_error = 1,
  exit_cap_exceeded = 2,
  exit_verification_failed = 3,
};

// Runs one command line (without the program name). JSON goes to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

}  // namespace icode
