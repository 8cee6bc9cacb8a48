#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bellpoly {

// Runs one command line (args[0] is the program name). Returns 0 on
// success or an inside verdict, 1 on a semantic negative (outside,
// signaling input, disagreement), 2 on usage or format errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellpoly
