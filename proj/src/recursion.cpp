#include "fractal_tutte/recursion.hpp"

#include <functional>
#include <optional>
#include <vector>

#include "fractal_tutte/errors.hpp"
#include "fractal_tutte/parallel.hpp"

namespace fractal_tutte {

namespace {

BiPoly c(long value) { return BiPoly::constant(value); }

StepTable make_fractal_table() {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  const BiPoly one = c(1);
  StepTable t;
  t.connected = {y * (y - one), c(4) * y, c(2) * x + c(2), BiPoly(), BiPoly()};
  t.cofactor = {BiPoly(), BiPoly(), c(2) * y + c(2), c(4) * x, x * (x - one)};
  return t;
}

// The fractal step with the extra edge removed.
StepTable make_flower22_table() {
  const BiPoly xm1 = BiPoly::x() - c(1);
  StepTable t;
  t.connected = {BiPoly::y() - c(1), c(4), c(2) * xm1, BiPoly(), BiPoly()};
  t.cofactor = {BiPoly(), BiPoly(), c(4), c(4) * xm1, xm1 * xm1};
  return t;
}

StepTable make_flower13_table() {
  const BiPoly xm1 = BiPoly::x() - c(1);
  StepTable t;
  t.connected = {BiPoly::y() - c(1), c(4), c(3) * xm1, xm1 * xm1, BiPoly()};
  t.cofactor = {BiPoly(), BiPoly(), c(3), c(3) * xm1, xm1 * xm1};
  return t;
}

void require_at_most(unsigned n, unsigned cap, const char* what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": generation " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
}

}  // namespace

const StepTable& step_table(LatticeFamily family) {
  static const StepTable fractal = make_fractal_table();
  static const StepTable flower22 = make_flower22_table();
  static const StepTable flower13 = make_flower13_table();
  switch (family) {
    case LatticeFamily::Fractal:
      return fractal;
    case LatticeFamily::Flower22:
      return flower22;
    case LatticeFamily::Flower13:
      return flower13;
  }
  return fractal;
}

TuttePair initial_pair() { return TuttePair{BiPoly::constant(1), BiPoly::constant(1)}; }

TuttePair apply_step(const StepTable& table, const TuttePair& pair) {
  // T1^(4-k) N^k is built from the three quadratic monomials.
  BiPoly t1_sq, mixed, n_sq;
  run_tasks({[&] { t1_sq = mul(pair.t1, pair.t1); },
             [&] { mixed = mul(pair.t1, pair.cofactor); },
             [&] { n_sq = mul(pair.cofactor, pair.cofactor); }});

  const std::array<std::pair<const BiPoly*, const BiPoly*>, 5> factors = {{
      {&t1_sq, &t1_sq}, {&t1_sq, &mixed}, {&t1_sq, &n_sq}, {&mixed, &n_sq}, {&n_sq, &n_sq}}};
  std::array<BiPoly, 5> quartic;
  std::vector<std::function<void()>> tasks;
  for (std::size_t k = 0; k < 5; ++k) {
    if (table.connected[k].is_zero() && table.cofactor[k].is_zero()) continue;
    tasks.emplace_back([&, k] { quartic[k] = mul(*factors[k].first, *factors[k].second); });
  }
  run_tasks(std::move(tasks));

  TuttePair next;
  for (std::size_t k = 0; k < 5; ++k) {
    if (!table.connected[k].is_zero()) next.t1 = add(next.t1, mul(table.connected[k], quartic[k]));
    if (!table.cofactor[k].is_zero()) next.cofactor = add(next.cofactor, mul(table.cofactor[k], quartic[k]));
  }
  return next;
}

EvalPair apply_step(const StepTable& table, const EvalPair& pair, const Rational& x, const Rational& y) {
  EvalPair next{0, 0};
  for (std::size_t k = 0; k < 5; ++k) {
    const bool in_t1 = !table.connected[k].is_zero();
    const bool in_n = !table.cofactor[k].is_zero();
    if (!in_t1 && !in_n) continue;
    const Rational monomial = pow_ui(pair.t1, 4 - k) * pow_ui(pair.cofactor, k);
    if (in_t1) next.t1 += evaluate(table.connected[k], x, y) * monomial;
    if (in_n) next.cofactor += evaluate(table.cofactor[k], x, y) * monomial;
  }
  return next;
}

TuttePair step_fractal(const TuttePair& pair) { return apply_step(step_table(LatticeFamily::Fractal), pair); }
TuttePair step_flower22(const TuttePair& pair) { return apply_step(step_table(LatticeFamily::Flower22), pair); }
TuttePair step_flower13(const TuttePair& pair) { return apply_step(step_table(LatticeFamily::Flower13), pair); }

BiPoly assemble(const TuttePair& pair) {
  return add(pair.t1, mul(BiPoly::x() - BiPoly::constant(1), pair.cofactor));
}

TuttePair iterate_pair(const StepTable& table, unsigned n) {
  TuttePair pair = initial_pair();
  for (unsigned i = 0; i < n; ++i) pair = apply_step(table, pair);
  return pair;
}

TuttePair tutte_pair(LatticeFamily family, unsigned n, unsigned symbolic_cap) {
  require_at_most(n, symbolic_cap, "symbolic recursion");
  return iterate_pair(step_table(family), n);
}

BiPoly tutte_symbolic(LatticeFamily family, unsigned n, unsigned symbolic_cap) {
  return assemble(tutte_pair(family, n, symbolic_cap));
}

Rational tutte_eval(LatticeFamily family, unsigned n, const Rational& x, const Rational& y) {
  require_at_most(n, kEvalCap, "pointwise recursion");
  const StepTable& table = step_table(family);
  EvalPair pair{1, 1};
  for (unsigned i = 0; i < n; ++i) pair = apply_step(table, pair, x, y);
  return pair.t1 + (x - 1) * pair.cofactor;
}

}  // namespace fractal_tutte
