#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace plaplace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "num" or "num/den" with an optional leading sign. Decimal points
/// are rejected: inputs must be exact fractions such as 41/10.
/// Throws InvalidArgument (see errors.hpp) on malformed input.
Rational parse_rational(std::string_view text);

/// "41/10", "-3", "0".
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

}  // namespace plaplace
