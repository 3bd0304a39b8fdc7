#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liebreadth {

/// Runs one command line (args excludes the program name). Algebra inputs
/// are file paths or "-" for `in`. Exit status: 0 success, 1 precondition or
/// validation failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace liebreadth
