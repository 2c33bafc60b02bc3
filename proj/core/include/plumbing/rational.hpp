#ifndef PLUMBING_RATIONAL_HPP
#define PLUMBING_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace plumbing {

// Exact arbitrary-precision arithmetic, GMP-backed.  mpq_rational keeps
// values in lowest terms with positive denominator, which is exactly the
// canonical form used for serialization.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numer(const Rational& r) { return numerator(r); }
inline Integer denom(const Rational& r) { return denominator(r); }

/// Largest integer <= r.
Integer floor_int(const Rational& r);

/// Smallest integer >= r.
Integer ceil_int(const Rational& r);

/// Nearest integer to r; ties round away from zero (deterministic).
Integer round_int(const Rational& r);

/// Floor of the square root of a nonnegative integer.
Integer isqrt(const Integer& n);

/// Renders "p/q" in lowest terms with positive denominator ("-5/3", "7/1").
std::string to_fraction_string(const Rational& r);

/// Parses "p/q" or a bare integer "p"; throws ParseError on malformed input.
Rational parse_fraction(std::string_view text);

}  // namespace plumbing

#endif
