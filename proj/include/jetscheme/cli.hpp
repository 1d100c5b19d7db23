#ifndef JETSCHEME_CLI_HPP
#define JETSCHEME_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jetscheme {

/// Exit codes of the command-line tool.
enum ExitCode : int { kVerified = 0, kUsage = 1, kRefuted = 2, kBudgetExhausted = 3 };

/// Runs the tool on `args` (without the program name). Normal output goes
/// to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "5" or "3..7", inclusive. Throws std::invalid_argument.
std::vector<unsigned> parse_order_range(const std::string& text);

}  // namespace jetscheme

#endif  // JETSCHEME_CLI_HPP
