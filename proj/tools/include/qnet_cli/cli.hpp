#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qnet::cli {

/// Exit codes: 0 success, 1 validation, 2 numerical failure, 3 I/O.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// "a:b:step" (inclusive of b up to rounding) or a comma-separated list.
std::vector<double> parse_grid(const std::string& text);

}  // namespace qnet::cli
