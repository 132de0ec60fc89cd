#pragma once

#include "coha/coha.hpp"

#include <string_view>

namespace coha {

/// Integers, `p/q` literals, variables `x[i,k]` (vertex i from 0, k from 1) and
/// `x` for x[0,1], combined with + - * ^ and parentheses.
/// Throws std::invalid_argument with the offending position.
Polynomial parse_polynomial(std::string_view text, const DimVector& d);

/// `d=<dims>:<expr>`, e.g. `d=1:x` or `d=1,1:x[0,1]*x[1,1]`.
SymPoly parse_element(std::string_view text);

}  // namespace coha
