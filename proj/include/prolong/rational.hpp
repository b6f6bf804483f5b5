#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace prolong {

// Arbitrary-precision integers and rationals. mpq_class keeps every value in
// lowest terms with a positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& q);

// Accepts "a" or "a/b" with an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned k);
Integer binomial(unsigned long n, unsigned long k);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace prolong
