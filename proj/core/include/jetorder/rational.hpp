#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jetorder {

// GMP keeps mpq_class canonical: gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" exactly. Throws Error(MalformedRational) on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Integer binomial(long n, long k);

}  // namespace jetorder
