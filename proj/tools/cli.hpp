#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primal {

// Runs the command line `args` (without the program name). Returns the exit
// status: 0 theorem / valid / found, 1 the negative answer, 2 errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace primal
