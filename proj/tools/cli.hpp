#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coha::cli {

/// Runs `coha-lab` with `args` (without the program name). Returns the exit
/// code: 0 on success, 1 on domain errors or failed checks, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coha::cli
