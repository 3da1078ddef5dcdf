#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperterrain {

/// Runs one CLI invocation (args excludes the program name). Exit codes:
/// 0 success / all checks pass, 1 verification failures, 2 input or config
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperterrain
