#pragma once

#include <cstdint>
#include <ostream>

namespace coha {

/// Runs a reduced property suite on built-in quivers and prints one
/// `PASS`/`FAIL` row per check. Returns true when every check passes.
bool run_self_check(std::ostream& out, std::uint64_t seed);

}  // namespace coha
