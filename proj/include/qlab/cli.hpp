#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qlab {

// Runs the command line `args` (without the program name). Returns the exit
// status: 0 success, 1 verification failure (or strict positivity failure),
// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlab
