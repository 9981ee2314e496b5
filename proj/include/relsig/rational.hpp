#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace relsig {

/// Arbitrary-precision integers and rationals. Rationals are kept in lowest
/// terms with a positive denominator; the whole core is exact, no floating
/// point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) as an exact integer; 0 when k > n.
Int binomial(unsigned n, unsigned k);

Int factorial(unsigned n);

/// Lowest-terms rendering: "p/q", or just "p" when the value is an integer.
std::string to_string(const Rational& value);

}  // namespace relsig
