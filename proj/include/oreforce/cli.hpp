#ifndef OREFORCE_CLI_HPP
#define OREFORCE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace oreforce {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,    // not an OTG, oracle size limit, bad family parameters
  kExitUsage = 2,     // bad flags, unreadable or malformed input
  kExitInternal = 3,  // internal invariant violated
};

// Runs the tool on `args` (args[0] is the program name). Graph input named
// "-" is read from `in`. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace oreforce

#endif  // OREFORCE_CLI_HPP
