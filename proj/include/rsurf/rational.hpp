#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rsurf {

// Exact, always-reduced fraction. Wall membership (area == 0) is decided on
// these values, so no floating point is used anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p/q" or an integer literal, optional leading sign, no spaces.
// Throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Comma separated list of rationals, e.g. "1/3,1/3,1/2".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace rsurf
