#pragma once

// Generation-by-generation Tutte polynomials of the lattice families.
//
// Each family carries the pair (T1, N): T1 sums the spanning subgraphs whose
// special vertices share a component, and (x-1)*N sums the others. One step
// maps the pair of generation n to that of generation n+1 through
//
//   T1' = sum_k a_k * T1^(4-k) * N^k,    N' = sum_k b_k * T1^(4-k) * N^k,
//
// with family-specific coefficient polynomials a_k, b_k (k = 0..4), and the
// full polynomial is T = T1 + (x-1)*N. Both components start at 1.

#include <array>

#include "fractal_tutte/bipoly.hpp"
#include "fractal_tutte/lattice.hpp"

namespace fractal_tutte {

struct TuttePair {
  BiPoly t1;
  BiPoly cofactor;  // N, with T2 = (x-1)*N

  friend bool operator==(const TuttePair&, const TuttePair&) = default;
};

struct EvalPair {
  Rational t1;
  Rational cofactor;

  friend bool operator==(const EvalPair&, const EvalPair&) = default;
};

/// Coefficients of T1^(4-k) N^k in the next T1 (`connected`) and next N
/// (`cofactor`).
struct StepTable {
  std::array<BiPoly, 5> connected;
  std::array<BiPoly, 5> cofactor;
};

const StepTable& step_table(LatticeFamily family);

inline constexpr unsigned kDefaultSymbolicCap = 4;
inline constexpr unsigned kEvalCap = 10;

TuttePair initial_pair();

TuttePair apply_step(const StepTable& table, const TuttePair& pair);
EvalPair apply_step(const StepTable& table, const EvalPair& pair, const Rational& x, const Rational& y);

TuttePair step_fractal(const TuttePair& pair);
TuttePair step_flower22(const TuttePair& pair);
TuttePair step_flower13(const TuttePair& pair);

/// T1 + (x-1)*N.
BiPoly assemble(const TuttePair& pair);

/// The pair after n steps of `table`. No cap; callers guard sizes.
TuttePair iterate_pair(const StepTable& table, unsigned n);

/// Throws CapExceeded when n > symbolic_cap.
TuttePair tutte_pair(LatticeFamily family, unsigned n, unsigned symbolic_cap = kDefaultSymbolicCap);
BiPoly tutte_symbolic(LatticeFamily family, unsigned n, unsigned symbolic_cap = kDefaultSymbolicCap);

/// Exact T_n(x, y) from the pointwise recursion; the polynomial is never
/// formed. Throws CapExceeded when n > kEvalCap.
Rational tutte_eval(LatticeFamily family, unsigned n, const Rational& x, const Rational& y);

}  // namespace fractal_tutte
