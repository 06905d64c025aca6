#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jacobi_walk {

/// Arbitrary-precision rational, always kept in canonical (lowest terms,
/// positive denominator) form.
using BigRational = mpq_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_fraction_string(const BigRational& q);

/// Parses "p", "p/q" or a plain decimal such as "-0.375" or "1e-3" into an
/// exact rational. Throws std::invalid_argument on malformed input.
BigRational parse_rational(std::string_view text);

/// p/q in canonical form (the two-argument mpq_class constructor does not canonicalize).
BigRational ratio(long p, long q);

/// n! as an exact rational.
BigRational factorial(unsigned long n);

/// Shortest round-trip decimal rendering of a double.
std::string to_decimal_string(double v);

}  // namespace jacobi_walk
