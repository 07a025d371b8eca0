#ifndef HOPFCYC_CLI_HPP
#define HOPFCYC_CLI_HPP

#include <ostream>

namespace hopfcyc::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kParseError = 2 };

/// Runs one subcommand. The report goes to `out` (or to --output), and
/// nothing is written there when the exit code is kParseError.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopfcyc::cli

#endif  // HOPFCYC_CLI_HPP
