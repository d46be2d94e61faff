#include "fractal_tutte/invariants.hpp"

#include <cmath>
#include <mutex>

#include "fractal_tutte/errors.hpp"
#include "fractal_tutte/parallel.hpp"

namespace fractal_tutte {

namespace {

void require_closed_form_cap(unsigned n) {
  if (n > kClosedFormCap) {
    throw CapExceeded("closed form: generation " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kClosedFormCap));
  }
}

unsigned long to_ulong(const BigInt& value) {
  if (!value.fits_ulong_p()) throw CapExceeded("exponent does not fit in 64 bits");
  return value.get_ui();
}

// ln tau(G_n) from the exponent form of the spanning-tree formulas.
double log_spanning_trees(LatticeFamily family, unsigned n) {
  const double four_n = std::ldexp(1.0, 2 * static_cast<int>(n));
  const double ln2 = std::log(2.0);
  const double ln3 = std::log(3.0);
  switch (family) {
    case LatticeFamily::Fractal:
      return (four_n - 1) * ln2;
    case LatticeFamily::Flower22:
      return 2.0 / 3.0 * (four_n - 1) * ln2;
    case LatticeFamily::Flower13:
      return (four_n - 3.0 * n - 1) / 9.0 * ln3 + (2 * four_n + 3.0 * n - 2) / 9.0 * 2 * ln2;
  }
  return 0;
}

}  // namespace

BigInt one_third_four_pow_minus_one(unsigned long n) { return (pow_ui(BigInt(4), n) - 1) / 3; }

BigInt spanning_trees_closed(LatticeFamily family, unsigned n) {
  require_closed_form_cap(n);
  const BigInt four_n = pow_ui(BigInt(4), n);
  switch (family) {
    case LatticeFamily::Fractal:
      return pow_ui(BigInt(2), to_ulong(four_n - 1));
    case LatticeFamily::Flower22:
      return pow_ui(BigInt(2), to_ulong(2 * (four_n - 1) / 3));
    case LatticeFamily::Flower13: {
      // Both exponents are integers: 4^n = 1 + 3n (mod 9).
      const BigInt threes = (four_n - 3 * n - 1) / 9;
      const BigInt fours = (2 * four_n + 3 * n - 2) / 9;
      return pow_ui(BigInt(3), to_ulong(threes)) * pow_ui(BigInt(4), to_ulong(fours));
    }
  }
  return 0;
}

BigInt acyclic_root_connected(unsigned n) {
  require_closed_form_cap(n);
  BigInt product = 1;
  for (unsigned i = 0; i <= n; ++i) {
    product *= pow_ui(BigInt(i + 1), 2 * to_ulong(pow_ui(BigInt(4), n - i)));
  }
  return product;
}

BigInt indegree_sequences_strong(unsigned n) {
  if (n == 0) throw DomainError("indegree-sequence formula requires n >= 1");
  require_closed_form_cap(n);
  // Exact: the product carries 2^(2*4^(n-1)).
  return BigInt(n) * acyclic_root_connected(n) / 2;
}

BiPoly diagonal_closed(unsigned n, unsigned symbolic_cap) {
  if (n > symbolic_cap) {
    throw CapExceeded("diagonal: generation " + std::to_string(n) + " exceeds cap " +
                      std::to_string(symbolic_cap));
  }
  const BiPoly x = BiPoly::x();
  const BiPoly factor = x * x + BiPoly::constant(5) * x + BiPoly::constant(2);
  return mul(x, pow(factor, static_cast<unsigned>(to_ulong(one_third_four_pow_minus_one(n)))));
}

BigInt bicycle_dimension(unsigned long n) { return one_third_four_pow_minus_one(n); }

GrowthConstant growth_constant(LatticeFamily family, unsigned n_max) {
  if (n_max < 1) throw DomainError("growth constant needs n_max >= 1");
  require_closed_form_cap(n_max);
  GrowthConstant result;
  const double ln2 = std::log(2.0);
  const double ln3 = std::log(3.0);
  switch (family) {
    case LatticeFamily::Fractal:
      result.exact = "(3/2)*ln(2)";
      result.decimal = 1.5 * ln2;
      break;
    case LatticeFamily::Flower22:
      result.exact = "ln(2)";
      result.decimal = ln2;
      break;
    case LatticeFamily::Flower13:
      result.exact = "(1/6)*(4*ln(2)+ln(3))";
      result.decimal = (4 * ln2 + ln3) / 6;
      break;
  }
  for (unsigned n = 1; n <= n_max; ++n) {
    const double vertices = (std::ldexp(2.0, 2 * static_cast<int>(n)) + 4) / 3;
    result.sequence.emplace_back(n, log_spanning_trees(family, n) / vertices);
  }
  return result;
}

std::pair<Rational, Rational> potts_tutte_point(const PottsParams& params) {
  if (params.v == 0) throw DomainError("Potts-Tutte mapping undefined at v = 0");
  return {(params.q + params.v) / params.v, params.v + 1};
}

Rational potts_partition(std::uint64_t vertex_count, std::uint64_t component_count,
                         const Rational& t_value, const PottsParams& params) {
  if (params.v == 0) throw DomainError("Potts-Tutte mapping undefined at v = 0");
  if (component_count > vertex_count) throw DomainError("more components than vertices");
  return pow_ui(params.q, component_count) * pow_ui(params.v, vertex_count - component_count) * t_value;
}

Rational potts_lattice(LatticeFamily family, unsigned n, const PottsParams& params) {
  const auto [x, y] = potts_tutte_point(params);
  const LatticeCounts counts = lattice_counts(family, n);
  if (!counts.vertices.fits_ulong_p()) throw CapExceeded("vertex count too large");
  // Every lattice generation is connected.
  return potts_partition(counts.vertices.get_ui(), 1, tutte_eval(family, n, x, y), params);
}

Rational potts_direct(const Multigraph& g, const PottsParams& params) {
  if (!is_integer(params.q) || params.q < 1) {
    throw DomainError("direct Potts summation needs a positive integer q");
  }
  const std::uint32_t vertices = g.vertex_count();
  if (!params.q.get_num().fits_ulong_p()) throw CapExceeded("q too large for enumeration");
  const std::uint64_t q = params.q.get_num().get_ui();

  std::uint64_t colorings = 1;
  for (std::uint32_t i = 0; i < vertices; ++i) {
    if (colorings > kPottsEnumerationCap / q) {
      throw CapExceeded("q^|V| exceeds the enumeration cap 2^24");
    }
    colorings *= q;
  }

  // histogram[m] counts colorings with m monochromatic edges; loops always count.
  const std::size_t edge_total = g.edge_count();
  std::vector<std::uint64_t> histogram(edge_total + 1, 0);
  std::mutex merge_mutex;
  parallel_chunks(colorings, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<std::uint64_t> local(edge_total + 1, 0);
    std::vector<std::uint64_t> color(vertices, 0);
    for (std::uint64_t code = begin; code < end; ++code) {
      std::uint64_t rest = code;
      for (std::uint32_t v = 0; v < vertices; ++v) {
        color[v] = rest % q;
        rest /= q;
      }
      std::size_t same = 0;
      for (const auto& e : g.edges()) same += color[e.a] == color[e.b] ? 1 : 0;
      ++local[same];
    }
    std::lock_guard lock(merge_mutex);
    for (std::size_t m = 0; m <= edge_total; ++m) histogram[m] += local[m];
  });

  Rational total = 0;
  Rational weight = 1;
  const Rational edge_weight = params.v + 1;
  for (std::size_t m = 0; m <= edge_total; ++m) {
    total += Rational(BigInt(static_cast<unsigned long>(histogram[m]))) * weight;
    weight *= edge_weight;
  }
  return total;
}

}  // namespace fractal_tutte
