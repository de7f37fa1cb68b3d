#ifndef WILDSURF_ARITH_HPP
#define WILDSURF_ARITH_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wildsurf {

// Arbitrary-precision integers and rationals. mpq_class values produced by
// the helpers below are always canonical: gcd(|num|, den) = 1, den >= 1, and
// zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" (q may be negative; the result is normalized).
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

int sign(const Rational& q);
int sign(const Integer& z);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

Integer floor_div(const Integer& a, const Integer& b);

// Largest k with 2^k <= |q| for q != 0; used to pick refinement precisions.
long log2_floor(const Rational& q);

// Nearest multiple of 2^-bits (ties toward +inf).
Rational round_dyadic(const Rational& q, unsigned bits);

// Dyadic bounds on sqrt(q), q >= 0, good to roughly 100 significant bits.
Rational sqrt_upper(const Rational& q);
Rational sqrt_lower(const Rational& q);

}  // namespace wildsurf

#endif  // WILDSURF_ARITH_HPP
