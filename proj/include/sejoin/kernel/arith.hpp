#pragma once

// Exact scalars. Integer and Rational are GMP values; mpq_class keeps every
// result canonical (reduced, positive denominator) after arithmetic, and the
// helpers here canonicalize on construction.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace sejoin {

using Integer = mpz_class;
using Rational = mpq_class;

Integer gcd(const Integer& x, const Integer& y);
Integer lcm(const Integer& x, const Integer& y);
Integer abs(const Integer& x);
int sign(const Integer& x);
int sign(const Rational& x);

// Throws DomainError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "n" or "n/d". Throws DomainError on malformed text or d = 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// "n" for integral values, otherwise "n/d".
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

enum class Rounding { Down, Up };

// Fixed-point rendering with `digits` fractional digits, rounded toward -inf
// (Down) or +inf (Up), so a Down/Up pair brackets x.
std::string to_decimal(const Rational& x, int digits, Rounding mode = Rounding::Down);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

// r with r*r == n, or nullopt when n is not a perfect square.
// Throws DomainError for n < 0.
std::optional<Integer> integer_sqrt_exact(const Integer& n);

// Square root of a rational that is a perfect square of a rational.
std::optional<Rational> rational_sqrt_exact(const Rational& x);

bool is_integral(const Rational& x);

// Numerator of x, throwing ConsistencyError with `what` if x is not integral.
Integer require_integral(const Rational& x, const char* what);

}  // namespace sejoin
