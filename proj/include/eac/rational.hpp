// Exact scalar arithmetic. Coefficients throughout the library are
// arbitrary-precision rationals in canonical form (gcd(|num|, den) = 1,
// den > 0, zero represented as 0/1) as maintained by GMP.
#pragma once

#include <gmpxx.h>
#include <string>

namespace eac {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den reduced to canonical form. den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

/// "3", "-3" or "a/b" with positive denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses an integer or "a/b" literal. Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

} // namespace eac
