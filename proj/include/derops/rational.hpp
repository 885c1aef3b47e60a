#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace derops {

// Exact arithmetic everywhere: the whole point of the engine is to tell
// 0 from 10^-15, so coefficients are arbitrary-precision rationals.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den reduced to canonical form (positive denominator, gcd 1).
/// Throws ValidationError on a zero denominator.
Rational make_rational(const Int& num, const Int& den);

/// Canonical literal: "-3/2", "5", "0".
std::string to_string(const Rational& r);

/// Parses a rational literal of the form ('-')? nat ('/' posnat)?.
Rational rational_from_string(std::string_view text);

/// Generalized binomial coefficient: z(z-1)...(z-k+1) / k!, a polynomial in z.
Rational binomial_rational(const Rational& z, unsigned k);

/// Exact n! for small n.
Int factorial(unsigned n);

/// Exact C(n, k) for non-negative integer n.
Int binomial_int(const Int& n, const Int& k);

} // namespace derops
