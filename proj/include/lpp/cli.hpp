#ifndef LPP_CLI_HPP_
#define LPP_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace lpp {

// Shared by every subcommand.
enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitUnsupportedClass = 3,
  kExitCapacity = 4,
  kExitOracleMismatch = 5,
};

// args excludes the program name; in stands in for stdin ("-" input).
int cli_main(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace lpp

#endif  // LPP_CLI_HPP_
