#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbasis::cli {

// Stable exit-code contract.
enum ExitCode : int {
  kOk = 0,         // check passed / witness found
  kViolation = 1,  // check failed
  kUsage = 2,      // malformed input or config
  kExhausted = 3,  // whole tree enumerated below the target
  kBudget = 4,     // budget spent, checkpoint written
  kBoundCap = 5,   // branching bound scan hit its cap
};

/// Runs the command line (without the program name). Final results go to
/// `out`; diagnostics and heartbeats go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbasis::cli
