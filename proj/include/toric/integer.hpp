#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;

// Parses "p/q" or "p" (optional sign, decimal digits). Throws MalformedInput.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Rational& q);

Integer dot(const IntVector& a, const IntVector& b);

}  // namespace toric
