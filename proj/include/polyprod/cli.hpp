#ifndef POLYPROD_CLI_HPP
#define POLYPROD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polyprod {

// Exit codes: 0 success, 1 verification/analysis failure, 2 invalid input.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInvalid = 2 };

// Runs the command line `args` (args[0] is the program name). Reports go
// to `out` unless an output file is requested; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "4,6,8", "2..50", "4,10..12", "" (empty). Throws std::invalid_argument.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace polyprod

#endif  // POLYPROD_CLI_HPP
