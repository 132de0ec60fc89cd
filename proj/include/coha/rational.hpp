#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace coha {

// Expression templates are switched off so the types behave as plain values
// inside Eigen containers and std algorithms.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Parses `p`, `-p` or `p/q` into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// `p/q`, or `p` when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

inline bool is_zero(const Rational& value) { return value == 0; }

inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }

}  // namespace coha
