#include "fractal_tutte/verify.hpp"

#include <functional>

#include "fractal_tutte/errors.hpp"
#include "fractal_tutte/invariants.hpp"
#include "fractal_tutte/oracle.hpp"

namespace fractal_tutte {

namespace {

std::size_t family_index(LatticeFamily family) {
  for (std::size_t i = 0; i < kAllFamilies.size(); ++i) {
    if (kAllFamilies[i] == family) return i;
  }
  return 0;
}

class Gates {
 public:
  explicit Gates(const VerifyOptions& options) : options_(options) {}

  const StepTable& table(LatticeFamily family) const {
    const StepTable* custom = options_.tables[family_index(family)];
    return custom ? *custom : step_table(family);
  }

  Rational eval(LatticeFamily family, unsigned n, const Rational& x, const Rational& y) const {
    EvalPair pair{1, 1};
    for (unsigned i = 0; i < n; ++i) pair = apply_step(table(family), pair, x, y);
    return pair.t1 + (x - 1) * pair.cofactor;
  }

  // Runs `check` for every n in [first, last]; check returns an empty string
  // on success or a description of the failed identity.
  void add(std::string name, unsigned first, unsigned last,
           const std::function<std::string(unsigned)>& check) {
    GateResult result{std::move(name), true, ""};
    for (unsigned n = first; n <= last && result.passed; ++n) {
      std::string failure = check(n);
      if (!failure.empty()) {
        result.passed = false;
        result.detail = "n=" + std::to_string(n) + ": " + failure;
      }
    }
    if (result.passed) result.detail = "n=" + std::to_string(first) + ".." + std::to_string(last);
    results_.push_back(std::move(result));
  }

  std::vector<GateResult> take() { return std::move(results_); }

  const VerifyOptions& options() const { return options_; }

 private:
  const VerifyOptions& options_;
  std::vector<GateResult> results_;
};

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
  return what + " gave " + got + ", expected " + want;
}

}  // namespace

std::vector<GateResult> run_verification(const VerifyOptions& options) {
  if (options.oracle_n_max > kVerifyOracleCap) {
    throw CapExceeded("oracle gates are limited to n <= " + std::to_string(kVerifyOracleCap));
  }
  Gates gates(options);
  const unsigned oracle_max = options.oracle_n_max;
  const unsigned closed_max = options.closed_form_n_max;

  for (auto family : kAllFamilies) {
    const std::string name(to_string(family));
    gates.add(name + " recursion vs oracles", 0, oracle_max, [&](unsigned n) -> std::string {
      const TuttePair pair = iterate_pair(gates.table(family), n);
      const BiPoly recursive = assemble(pair);
      const Multigraph g = build_lattice(family, n);
      const BiPoly by_contraction = tutte_deletion_contraction(g);
      if (recursive != by_contraction) {
        return mismatch("recursion", to_string(recursive), "deletion-contraction " + to_string(by_contraction));
      }
      const SplitTutte split = split_tutte(g);
      if (add(split.connected, split.separated) != recursive) return "subgraph expansion disagrees";
      if (split.connected != pair.t1) return mismatch("T1", to_string(pair.t1), to_string(split.connected));
      const BiPoly separated = mul(BiPoly::x() - BiPoly::constant(1), pair.cofactor);
      if (split.separated != separated) {
        return mismatch("(x-1)N", to_string(separated), to_string(split.separated));
      }
      return {};
    });
  }

  for (auto family : kAllFamilies) {
    gates.add(std::string(to_string(family)) + " spanning trees closed form", 0, closed_max,
              [&](unsigned n) -> std::string {
                const Rational got = gates.eval(family, n, 1, 1);
                const BigInt want = spanning_trees_closed(family, n);
                if (got != Rational(want)) return mismatch("T(1,1)", to_string(got), to_decimal(want));
                return {};
              });
  }

  gates.add("fractal acyclic root-connected orientations", 1, closed_max, [&](unsigned n) -> std::string {
    const Rational got = gates.eval(LatticeFamily::Fractal, n, 1, 0);
    const BigInt want = acyclic_root_connected(n);
    if (got != Rational(want)) return mismatch("T(1,0)", to_string(got), to_decimal(want));
    return {};
  });

  gates.add("fractal strong-orientation indegree sequences", 1, closed_max, [&](unsigned n) -> std::string {
    const Rational got = gates.eval(LatticeFamily::Fractal, n, 0, 1);
    const BigInt want = indegree_sequences_strong(n);
    if (got != Rational(want)) return mismatch("T(0,1)", to_string(got), to_decimal(want));
    return {};
  });

  gates.add("fractal diagonal closed form", 0, std::min(3u, closed_max), [&](unsigned n) -> std::string {
    const BiPoly got = diagonal(assemble(iterate_pair(gates.table(LatticeFamily::Fractal), n)));
    const BiPoly want = diagonal_closed(n);
    if (got != want) return mismatch("T(x,x)", to_string(got), to_string(want));
    return {};
  });

  gates.add("fractal bicycle dimension", 0, closed_max, [&](unsigned n) -> std::string {
    const Rational got = gates.eval(LatticeFamily::Fractal, n, -1, -1);
    const BigInt edges = lattice_counts(LatticeFamily::Fractal, n).edges;
    const BigInt sign = edges % 2 == 0 ? 1 : -1;
    const BigInt want = sign * pow_ui(BigInt(-2), bicycle_dimension(n).get_ui());
    if (got != Rational(want)) return mismatch("T(-1,-1)", to_string(got), to_decimal(want));
    return {};
  });

  gates.add("potts relation on small generations", 0, std::min(1u, oracle_max), [&](unsigned n) -> std::string {
    for (auto family : kAllFamilies) {
      if (n == 0 && family != LatticeFamily::Fractal) continue;
      const Multigraph g = build_lattice(family, n);
      for (int q = 1; q <= 3; ++q) {
        for (const Rational& v : {Rational(-1, 2), Rational(1), Rational(2)}) {
          const PottsParams params{q, v};
          const auto [x, y] = potts_tutte_point(params);
          const Rational mapped = potts_partition(g.vertex_count(), 1, gates.eval(family, n, x, y), params);
          const Rational direct = potts_direct(g, params);
          if (mapped != direct) {
            return mismatch(std::string(to_string(family)) + " Z(q=" + std::to_string(q) + ",v=" +
                                to_string(v) + ")",
                            to_string(mapped), to_string(direct));
          }
        }
      }
    }
    return {};
  });

  for (auto family : kAllFamilies) {
    gates.add(std::string(to_string(family)) + " order and size", 0, closed_max, [&](unsigned n) -> std::string {
      const Multigraph g = build_lattice(family, n);
      const LatticeCounts counts = lattice_counts(family, n);
      if (counts.vertices != g.vertex_count() || counts.edges != static_cast<unsigned long>(g.edge_count())) {
        return "built " + std::to_string(g.vertex_count()) + "/" + std::to_string(g.edge_count()) +
               ", closed form " + to_decimal(counts.vertices) + "/" + to_decimal(counts.edges);
      }
      if (!is_connected(g)) return "lattice is disconnected";
      return {};
    });
  }

  return gates.take();
}

}  // namespace fractal_tutte
