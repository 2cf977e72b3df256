#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropfiber {

/**
 * Runs one command line (without the program name). Returns the exit code:
 * 0 success, 1 input/parse error, 2 domain error.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropfiber
