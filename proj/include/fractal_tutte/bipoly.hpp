#pragma once

// Sparse bivariate polynomials with arbitrary-precision integer coefficients.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fractal_tutte/numbers.hpp"

namespace fractal_tutte {

struct Term {
  std::uint32_t x = 0;  // power of x
  std::uint32_t y = 0;  // power of y
  BigInt coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Canonical sparse polynomial in Z[x, y].
///
/// Terms are kept sorted by (x desc, y desc) with no zero coefficients, so
/// structural equality is polynomial equality and the zero polynomial has no
/// terms. Values are immutable once built; every operation returns a new one.
class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly constant(const BigInt& c);
  static BiPoly monomial(const BigInt& c, std::uint32_t x_power, std::uint32_t y_power);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  /// Accepts terms in any order; merges repeated exponents and drops zeros.
  static BiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Highest power of x (resp. y) present; 0 for the zero polynomial.
  std::uint32_t degree_x() const;
  std::uint32_t degree_y() const;

  BigInt coeff(std::uint32_t x_power, std::uint32_t y_power) const;

  /// Multiplies by x^dx y^dy.
  BiPoly shifted(std::uint32_t dx, std::uint32_t dy) const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  explicit BiPoly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  friend BiPoly add(const BiPoly&, const BiPoly&);
  friend BiPoly negate(const BiPoly&);
  friend BiPoly scale(const BiPoly&, const BigInt&);
  friend BiPoly mul(const BiPoly&, const BiPoly&);
  friend BiPoly divide_by_x_minus_1(const BiPoly&);

  std::vector<Term> terms_;
};

BiPoly add(const BiPoly& a, const BiPoly& b);
BiPoly negate(const BiPoly& a);
BiPoly sub(const BiPoly& a, const BiPoly& b);
BiPoly scale(const BiPoly& a, const BigInt& factor);
BiPoly mul(const BiPoly& a, const BiPoly& b);

/// a^k by repeated squaring; a^0 == 1 (including 0^0).
BiPoly pow(const BiPoly& a, unsigned k);

/// Exact value at a rational point.
Rational evaluate(const BiPoly& a, const Rational& x, const Rational& y);

/// a(x, x), returned with every y power zero.
BiPoly diagonal(const BiPoly& a);

/// q with (x-1)*q == a. Divides each fixed-y slice synthetically and throws
/// NotDivisible if any slice leaves a remainder.
BiPoly divide_by_x_minus_1(const BiPoly& a);

inline BiPoly operator+(const BiPoly& a, const BiPoly& b) { return add(a, b); }
inline BiPoly operator-(const BiPoly& a, const BiPoly& b) { return sub(a, b); }
inline BiPoly operator-(const BiPoly& a) { return negate(a); }
inline BiPoly operator*(const BiPoly& a, const BiPoly& b) { return mul(a, b); }
inline BiPoly operator*(const BigInt& c, const BiPoly& a) { return scale(a, c); }

/// Human-readable form, e.g. "x^3+2*x^2-x*y+1"; "0" for the zero polynomial.
std::string to_string(const BiPoly& a);

/// {"terms":[{"x":<int>,"y":<int>,"c":"<decimal>"},...]}, terms in (x desc,
/// y desc) order, no whitespace.
std::string to_json(const BiPoly& a);

/// Inverse of to_json. Accepts any term order and whitespace; throws ParseError.
BiPoly poly_from_json(std::string_view text);

}  // namespace fractal_tutte
