#ifndef ULRICH_TOOLS_CLI_HPP
#define ULRICH_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ulrich::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name). The structured
/// or text document goes to `out` unless --output names a file; diagnostics
/// go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a..b" or "a"; throws std::invalid_argument on anything else.
std::pair<long, long> parse_range(const std::string& text);

/// Worker count from ULRICH_WORKERS, else 1.
unsigned default_workers();

} // namespace ulrich::cli

#endif
