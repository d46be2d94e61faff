#include "fractal_tutte/bipoly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "fractal_tutte/errors.hpp"

namespace fractal_tutte {

namespace {

// Canonical order: x descending, then y descending.
bool precedes(const Term& a, const Term& b) {
  return a.x != b.x ? a.x > b.x : a.y > b.y;
}

// Dense scratch grids above this many cells fall back to hashing.
constexpr std::size_t kDenseCellLimit = std::size_t{1} << 22;

std::uint64_t pack(std::uint32_t x, std::uint32_t y) {
  return (static_cast<std::uint64_t>(x) << 32) | y;
}

}  // namespace

BiPoly BiPoly::constant(const BigInt& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const BigInt& c, std::uint32_t x_power, std::uint32_t y_power) {
  if (c == 0) return {};
  return BiPoly(std::vector<Term>{Term{x_power, y_power, c}});
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), precedes);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& term : terms) {
    if (!merged.empty() && merged.back().x == term.x && merged.back().y == term.y) {
      merged.back().coeff += term.coeff;
    } else {
      merged.push_back(std::move(term));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return BiPoly(std::move(merged));
}

std::uint32_t BiPoly::degree_x() const { return terms_.empty() ? 0 : terms_.front().x; }

std::uint32_t BiPoly::degree_y() const {
  std::uint32_t best = 0;
  for (const auto& t : terms_) best = std::max(best, t.y);
  return best;
}

BigInt BiPoly::coeff(std::uint32_t x_power, std::uint32_t y_power) const {
  Term probe{x_power, y_power, {}};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, precedes);
  if (it != terms_.end() && it->x == x_power && it->y == y_power) return it->coeff;
  return 0;
}

BiPoly BiPoly::shifted(std::uint32_t dx, std::uint32_t dy) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.x += dx;
    t.y += dy;
  }
  return BiPoly(std::move(out));
}

BiPoly add(const BiPoly& a, const BiPoly& b) {
  const auto& lhs = a.terms_;
  const auto& rhs = b.terms_;
  std::vector<Term> out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0, j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (precedes(lhs[i], rhs[j])) {
      out.push_back(lhs[i++]);
    } else if (precedes(rhs[j], lhs[i])) {
      out.push_back(rhs[j++]);
    } else {
      BigInt sum = lhs[i].coeff + rhs[j].coeff;
      if (sum != 0) out.push_back(Term{lhs[i].x, lhs[i].y, std::move(sum)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), lhs.begin() + static_cast<std::ptrdiff_t>(i), lhs.end());
  out.insert(out.end(), rhs.begin() + static_cast<std::ptrdiff_t>(j), rhs.end());
  return BiPoly(std::move(out));
}

BiPoly negate(const BiPoly& a) {
  std::vector<Term> out = a.terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return BiPoly(std::move(out));
}

BiPoly sub(const BiPoly& a, const BiPoly& b) { return add(a, negate(b)); }

BiPoly scale(const BiPoly& a, const BigInt& factor) {
  if (factor == 0) return {};
  std::vector<Term> out = a.terms_;
  for (auto& t : out) t.coeff *= factor;
  return BiPoly(std::move(out));
}

BiPoly mul(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};

  const std::size_t width_y = std::size_t{a.degree_y()} + b.degree_y() + 1;
  const std::size_t width_x = std::size_t{a.degree_x()} + b.degree_x() + 1;
  const std::size_t cells = width_x * width_y;
  const std::size_t pairs = a.size() * b.size();

  std::vector<Term> out;
  if (cells <= kDenseCellLimit && cells <= 8 * pairs + 64) {
    std::vector<BigInt> grid(cells);
    std::vector<bool> touched(cells, false);
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        std::size_t index = (ta.x + tb.x) * width_y + (ta.y + tb.y);
        mpz_addmul(grid[index].get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
        touched[index] = true;
      }
    }
    for (std::size_t index = cells; index-- > 0;) {
      if (touched[index] && grid[index] != 0) {
        out.push_back(Term{static_cast<std::uint32_t>(index / width_y),
                           static_cast<std::uint32_t>(index % width_y), std::move(grid[index])});
      }
    }
    return BiPoly(std::move(out));
  }

  std::unordered_map<std::uint64_t, BigInt> acc;
  acc.reserve(std::min<std::size_t>(pairs, cells));
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      auto& cell = acc[pack(ta.x + tb.x, ta.y + tb.y)];
      mpz_addmul(cell.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
    }
  }
  out.reserve(acc.size());
  for (auto& [key, coeff] : acc) {
    out.push_back(Term{static_cast<std::uint32_t>(key >> 32),
                       static_cast<std::uint32_t>(key & 0xffffffffu), std::move(coeff)});
  }
  return BiPoly::from_terms(std::move(out));
}

BiPoly pow(const BiPoly& a, unsigned k) {
  BiPoly result = BiPoly::constant(1);
  BiPoly base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Rational evaluate(const BiPoly& a, const Rational& x, const Rational& y) {
  if (a.is_zero()) return 0;
  // Clear denominators: with x = p/q and y = r/s the value is
  //   sum c * p^i q^(D-i) * r^j s^(E-j) / (q^D s^E).
  const std::uint32_t dx = a.degree_x();
  const std::uint32_t dy = a.degree_y();
  auto weights = [](const BigInt& num, const BigInt& den, std::uint32_t degree) {
    std::vector<BigInt> num_pows(degree + 1), den_pows(degree + 1), out(degree + 1);
    num_pows[0] = 1;
    den_pows[0] = 1;
    for (std::uint32_t i = 1; i <= degree; ++i) {
      num_pows[i] = num_pows[i - 1] * num;
      den_pows[i] = den_pows[i - 1] * den;
    }
    for (std::uint32_t i = 0; i <= degree; ++i) out[i] = num_pows[i] * den_pows[degree - i];
    return out;
  };
  const auto x_weights = weights(x.get_num(), x.get_den(), dx);
  const auto y_weights = weights(y.get_num(), y.get_den(), dy);

  BigInt total = 0;
  BigInt slice = 0;
  const auto& terms = a.terms();
  for (std::size_t i = 0; i < terms.size();) {
    const std::uint32_t xp = terms[i].x;
    slice = 0;
    for (; i < terms.size() && terms[i].x == xp; ++i) {
      mpz_addmul(slice.get_mpz_t(), terms[i].coeff.get_mpz_t(), y_weights[terms[i].y].get_mpz_t());
    }
    mpz_addmul(total.get_mpz_t(), slice.get_mpz_t(), x_weights[xp].get_mpz_t());
  }
  Rational value(total, pow_ui(x.get_den(), dx) * pow_ui(y.get_den(), dy));
  value.canonicalize();
  return value;
}

BiPoly diagonal(const BiPoly& a) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back(Term{t.x + t.y, 0, t.coeff});
  return BiPoly::from_terms(std::move(out));
}

BiPoly divide_by_x_minus_1(const BiPoly& a) {
  // Group coefficients by y power; each slice is a univariate polynomial in x.
  std::map<std::uint32_t, std::vector<const Term*>> slices;
  for (const auto& t : a.terms_) slices[t.y].push_back(&t);

  std::vector<Term> quotient;
  for (const auto& [y_power, slice] : slices) {
    // slice is ordered by x descending. Synthetic division by (x - 1):
    // q_{k-1} = p_k + q_k, remainder = p_0 + q_0.
    const std::uint32_t degree = slice.front()->x;
    BigInt carry = 0;
    std::size_t next = 0;
    for (std::uint32_t k = degree; k >= 1; --k) {
      if (next < slice.size() && slice[next]->x == k) carry += slice[next++]->coeff;
      if (carry != 0) quotient.push_back(Term{k - 1, y_power, carry});
    }
    BigInt remainder = carry;
    if (next < slice.size()) remainder += slice[next]->coeff;
    if (remainder != 0) {
      throw NotDivisible("(x-1) does not divide the polynomial: remainder " +
                         to_decimal(remainder) + "*y^" + std::to_string(y_power));
    }
  }
  return BiPoly::from_terms(std::move(quotient));
}

std::string to_string(const BiPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    const bool negative = t.coeff < 0;
    const BigInt magnitude = abs(t.coeff);
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    std::string monomial;
    auto append_power = [&monomial](char var, std::uint32_t power) {
      if (power == 0) return;
      if (!monomial.empty()) monomial += '*';
      monomial += var;
      if (power > 1) monomial += '^' + std::to_string(power);
    };
    append_power('x', t.x);
    append_power('y', t.y);
    if (monomial.empty()) {
      out += to_decimal(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += to_decimal(magnitude) + '*' + monomial;
    }
  }
  return out;
}

std::string to_json(const BiPoly& a) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : a.terms()) {
    nlohmann::ordered_json entry;
    entry["x"] = t.x;
    entry["y"] = t.y;
    entry["c"] = to_decimal(t.coeff);
    terms.push_back(std::move(entry));
  }
  nlohmann::ordered_json doc;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

BiPoly poly_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw ParseError("polynomial JSON must be an object with a \"terms\" array");
  }
  std::vector<Term> terms;
  for (const auto& entry : doc["terms"]) {
    if (!entry.is_object() || !entry.contains("x") || !entry.contains("y") || !entry.contains("c") ||
        !entry["x"].is_number_unsigned() || !entry["y"].is_number_unsigned() ||
        !entry["c"].is_string()) {
      throw ParseError("polynomial term must be {\"x\":<uint>,\"y\":<uint>,\"c\":\"<int>\"}");
    }
    terms.push_back(Term{entry["x"].get<std::uint32_t>(), entry["y"].get<std::uint32_t>(),
                         parse_bigint(entry["c"].get<std::string>())});
  }
  return BiPoly::from_terms(std::move(terms));
}

}  // namespace fractal_tutte
