#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bellpoly {

// mpq_class keeps values canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

// "N/D", or "N" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts "N", "-N", "N/D". Throws std::invalid_argument on malformed text
// or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// Multiplies a rational vector by the lcm of its denominators.
IntegerVector clear_denominators(const RationalVector& values);

// gcd of the absolute values; 0 for an all-zero vector.
Integer gcd_of(const IntegerVector& values);

RationalVector to_rational(const IntegerVector& values);

}  // namespace bellpoly
