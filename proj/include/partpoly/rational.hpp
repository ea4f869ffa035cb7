#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace partpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den with den > 0 and gcd(|num|, den) = 1.
/// Throws std::invalid_argument if den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

/// Parses "p/q", "p", or an exact decimal string ("2.0554" -> 10277/5000,
/// "-0.5" -> -1/2). No binary floating point is involved.
Rational rational_from_string(std::string_view s);

/// "p/q" for non-integers, plain "p" otherwise.
std::string rational_to_string(const Rational& r);

/// Fixed-point decimal with `digits` places after the point, rounded
/// half-to-even. digits == 0 yields an integer string.
std::string decimal_string(const Rational& r, int digits);

int sign(const Rational& r);
int sign(const Integer& z);

/// r^e for e >= 0 (exact).
Rational pow_rational(const Rational& r, unsigned long e);

/// The unique rational with smallest denominator in [lo, hi]
/// (Stern-Brocot descent). Requires lo <= hi.
Rational simplest_in_interval(const Rational& lo, const Rational& hi);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace partpoly
