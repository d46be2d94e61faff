#pragma once

// Exact integers and rationals. Both are thin aliases over GMP's C++ classes;
// mpq_class keeps values canonical (lowest terms, positive denominator) under
// arithmetic, and the helpers below keep it that way at the parsing boundary.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fractal_tutte {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_decimal(const BigInt& value);

/// Parses an optionally signed base-10 integer. Throws ParseError.
BigInt parse_bigint(std::string_view text);

/// Parses "p/q" or an integer. The result is canonical. Throws ParseError,
/// including for a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or just "p" when the denominator is one.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// base^exponent for an arbitrary non-negative exponent that fits in 64 bits.
BigInt pow_ui(const BigInt& base, unsigned long exponent);
Rational pow_ui(const Rational& base, unsigned long exponent);

}  // namespace fractal_tutte
