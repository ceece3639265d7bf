#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace currentlab {

enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitInput = 2, kExitViolated = 3, kExitBudget = 4 };

// args excludes the program name. Reports go to `out` (or --out), errors to
// `err` as one JSON object per line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace currentlab
