#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace polyhodge {

// All arithmetic in this project is exact: arbitrary-precision integers and
// rationals kept in lowest terms with a positive denominator (cpp_rational's
// canonical form). No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor division, rounding toward negative infinity. b must be nonzero.
Int floor_div(const Int& a, const Int& b);

// Largest integer <= r.
Int rational_floor(const Rational& r);

// r - floor(r), always in [0, 1).
Rational fractional_part(const Rational& r);

bool is_integral(const Rational& r);

// Lowest-terms text form: "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Int& v);

// Inverse of to_string: accepts "a/b" or "a" with optional leading minus.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace polyhodge
