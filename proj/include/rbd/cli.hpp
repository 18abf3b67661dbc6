#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rbd {

// Runs the command line tool. args[0] is the program name. Returns the exit
// status: 0 success, 1 scenario mismatch (verify-paper), 2 usage or input
// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbd
