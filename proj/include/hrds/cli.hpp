#pragma once

#include <iosfwd>
#include <utility>
#include <string>
#include <vector>

namespace hrds {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolated = 1,  ///< the checked property fails (not constant rank-distance, not maximal, infeasible)
  kExitUsage = 2,     ///< bad flags, unreadable or malformed input
  kExitBudget = 3,    ///< a size or time budget ran out
  kExitInternal = 4,  ///< an internal identity failed; a bug
};

/// Runs the tool on `args` (without the program name). Results go to `out`,
/// diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits q into (p, e) with q = p^e; throws UsageError if q is not a prime power.
std::pair<unsigned, unsigned> prime_power(unsigned q);

}  // namespace hrds
