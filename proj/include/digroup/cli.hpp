#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace digroup {

/// Runs the dgk command line with `args` excluding the program name.
/// Returns 0 on success, 1 on usage or parse errors and 2 when a
/// verification fails.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace digroup
