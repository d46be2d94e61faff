#pragma once

// Closed-form special values of the lattice Tutte polynomials and the Potts
// partition function.

#include <string>
#include <utility>
#include <vector>

#include "fractal_tutte/bipoly.hpp"
#include "fractal_tutte/lattice.hpp"
#include "fractal_tutte/recursion.hpp"

namespace fractal_tutte {

inline constexpr unsigned kClosedFormCap = 10;

/// Spanning-tree count tau of generation n:
///   Fractal   2^(4^n - 1)
///   Flower22  2^((2/3)(4^n - 1))
///   Flower13  3^((4^n - 3n - 1)/9) * 4^((2*4^n + 3n - 2)/9)
BigInt spanning_trees_closed(LatticeFamily family, unsigned n);

/// T_n(1,0) of the fractal lattice: prod_{i=0..n} (i+1)^(2*4^(n-i)).
BigInt acyclic_root_connected(unsigned n);

/// T_n(0,1) of the fractal lattice: (n/2) * acyclic_root_connected(n).
/// Requires n >= 1 (DomainError otherwise).
BigInt indegree_sequences_strong(unsigned n);

/// x * (x^2 + 5x + 2)^((4^n - 1)/3), the fractal Tutte polynomial on y = x.
BiPoly diagonal_closed(unsigned n, unsigned symbolic_cap = kDefaultSymbolicCap);

/// (4^n - 1)/3, the bicycle-space dimension of the fractal lattice.
BigInt bicycle_dimension(unsigned long n);

/// (4^n - 1)/3 as an exact integer.
BigInt one_third_four_pow_minus_one(unsigned long n);

struct GrowthConstant {
  std::string exact;    // e.g. "(3/2)*ln(2)"
  double decimal = 0;   // value of `exact`
  std::vector<std::pair<unsigned, double>> sequence;  // (n, ln tau(G_n) / |V(G_n)|)
};

/// Limit of ln tau / |V| plus the finite-n ratios for n = 1..n_max, taken
/// from the exponent form of the closed formulas.
GrowthConstant growth_constant(LatticeFamily family, unsigned n_max);

struct PottsParams {
  Rational q;
  Rational v;
};

/// The Tutte point ((q+v)/v, v+1). DomainError when v == 0.
std::pair<Rational, Rational> potts_tutte_point(const PottsParams& params);

/// q^k v^(|V|-k) * t_value, with t_value = T((q+v)/v, v+1). DomainError when v == 0.
Rational potts_partition(std::uint64_t vertex_count, std::uint64_t component_count,
                         const Rational& t_value, const PottsParams& params);

/// potts_partition composed with tutte_eval for a lattice generation.
Rational potts_lattice(LatticeFamily family, unsigned n, const PottsParams& params);

inline constexpr std::uint64_t kPottsEnumerationCap = std::uint64_t{1} << 24;

/// Direct sum over all q^|V| colorings of prod_e (1 + v*[ends share a color]).
/// q must be a positive integer (DomainError) and q^|V| <= 2^24 (CapExceeded).
Rational potts_direct(const Multigraph& g, const PottsParams& params);

}  // namespace fractal_tutte
