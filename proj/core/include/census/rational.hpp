#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace census {

using Integer = mpz_class;
/// Canonical big rational: gcd(|num|, den) = 1 and den > 0 (maintained by GMP).
using Rational = mpq_class;

/// "num/den" with decimal big integers; den is always written, even when 1.
std::string to_fraction_string(const Rational& r);
/// Accepts "n", "-n" or "n/d"; throws census::Error(ParseError) otherwise.
Rational parse_fraction(std::string_view text);

Rational pow(const Rational& base, int exponent);

}  // namespace census
