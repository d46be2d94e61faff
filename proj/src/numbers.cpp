#include "fractal_tutte/numbers.hpp"

#include <cctype>

#include "fractal_tutte/errors.hpp"

namespace fractal_tutte {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  // GMP rejects a leading '+'.
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  auto num_text = text.substr(0, slash);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  BigInt num = parse_bigint(num_text);
  BigInt den = parse_bigint(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational result(num, den);
  result.canonicalize();
  return result;
}

std::string to_string(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  if (is_integer(reduced)) return to_decimal(reduced.get_num());
  return to_decimal(reduced.get_num()) + "/" + to_decimal(reduced.get_den());
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

BigInt pow_ui(const BigInt& base, unsigned long exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational pow_ui(const Rational& base, unsigned long exponent) {
  // Powers of coprime integers stay coprime, so no gcd pass is needed.
  return Rational(pow_ui(base.get_num(), exponent), pow_ui(base.get_den(), exponent));
}

}  // namespace fractal_tutte
