#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace svplab {

// Runs the command-line toolkit against an argument vector (program name
// excluded). JSON goes to `out`; usage and error text to `err`.
// Exit codes: 0 success, 2 input error, 3 enumeration-cap error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svplab
