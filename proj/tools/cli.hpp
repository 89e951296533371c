#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace emcg::cli {

/// Runs one command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 domain or validation error, 2 parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace emcg::cli
