#pragma once

#include <ostream>

namespace vfk {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitInputError = 2,
  kExitInconclusive = 3,
};

/// Parses argv (argv[0] is the program name) and runs one subcommand.
/// Results go to `out`, diagnostics and usage text to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vfk
