#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gridramsey {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "NUM/DEN" or "NUM"; throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

Integer ipow(unsigned long base, unsigned long exponent);
Rational qpow(const Rational& base, unsigned long exponent);

// r^e for signed exponents.
Rational qpow_signed(unsigned long base, long exponent);

Integer binomial(unsigned long n, unsigned long k);

// Decimal rendering with the given number of significant digits, e.g. "1.23456789012e+46245".
std::string to_decimal(const Rational& value, int significant_digits = 12);

std::string to_string(const Rational& value);

}  // namespace gridramsey
