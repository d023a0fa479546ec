#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dmt {

// Runs the command-line front end. Exit codes: 0 all checks pass, 1 a
// mathematical check failed, 2 input or usage error, 3 a guard was exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmt
