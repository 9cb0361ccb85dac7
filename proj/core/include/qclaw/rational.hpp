#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qclaw {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "3", "-3", "3/2" (always in lowest terms, denominator positive).
std::string rational_to_string(const Rational& r);

/// Inverse of rational_to_string.  Throws ParseError.
Rational parse_rational(const std::string& s);

}  // namespace qclaw
