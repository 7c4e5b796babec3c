#ifndef TCA_CLI_HPP
#define TCA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tca {

// Runs one CLI invocation (args excludes the program name). Exit codes:
// 0 success / property holds, 1 property fails (not totally compatible,
// pair unreachable, oracle says no), 2 usage, parse or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tca

#endif
