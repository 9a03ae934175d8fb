#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homoid::cli {

enum ExitCode : int {
  success        = 0,
  math_failure   = 1,  // inversion mismatch, cancellation witness, ...
  usage_error    = 2,  // bad arguments or invalid presentation
  resource_error = 3,  // a limit was exceeded, or arithmetic overflowed
};

// Runs one command. args excludes the program name, e.g.
// {"growth", "--preset", "bii", "--max-degree", "8", "--format", "json"}.
// JSON output is a single document on `out`; diagnostics go to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace homoid::cli
