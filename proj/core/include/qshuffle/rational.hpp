#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace qshuffle {

/// Exact arithmetic carriers for every probability and coefficient in the
/// library. cpp_rational keeps values reduced with a positive denominator,
/// which is exactly the invariant the rest of the code relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! as an exact integer.
Integer factorial(int n);

/// Binomial coefficient C(n, k) as an exact integer; 0 when k < 0 or k > n.
/// n may be any integer >= 0 here (negative upper index is not needed).
Integer binomial(long long n, long long k);

/// r^k for k >= 0 (r^0 == 1 even for r == 0).
Rational pow_rational(const Rational& r, unsigned long k);

/// Parses "p/q" or "p" (optional leading '-'); q must be positive.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Fixed-point decimal rendering with `places` digits after the point,
/// rounded half to even at the last rendered digit.
std::string decimal_string(const Rational& r, int places);

double to_double(const Rational& r);

} // namespace qshuffle
