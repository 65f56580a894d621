#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cremona::cli {

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 ok, 2 parse error, 3 precondition, 4 overflow or
/// internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cremona::cli
