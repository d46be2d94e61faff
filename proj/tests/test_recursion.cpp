#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "fractal_tutte/errors.hpp"
#include "fractal_tutte/oracle.hpp"
#include "fractal_tutte/recursion.hpp"
#include "test_support.hpp"

using namespace fractal_tutte;
using namespace fractal_tutte::testing;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(FRACTAL_TUTTE_TEST_DATA) + "/" + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Symbolic pairs up to generation 4 are shared across tests.
const TuttePair& cached_pair(LatticeFamily family, unsigned n) {
  static std::map<std::pair<LatticeFamily, unsigned>, TuttePair> cache;
  auto key = std::make_pair(family, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    TuttePair pair = n == 0 ? initial_pair() : apply_step(step_table(family), cached_pair(family, n - 1));
    it = cache.emplace(key, std::move(pair)).first;
  }
  return it->second;
}

BiPoly c4_tutte() { return X() * X() * X() + X() * X() + X() + Y(); }

}  // namespace

TEST(StepFractal, FirstStep) {
  const TuttePair next = step_fractal(initial_pair());
  EXPECT_EQ(next.t1, Y() * Y() + C(3) * Y() + C(2) * X() + C(2));
  EXPECT_EQ(next.cofactor, X() * X() + C(3) * X() + C(2) * Y() + C(2));
  EXPECT_EQ(assemble(next), X() * X() * X() + C(2) * X() * X() + X() + C(2) * X() * Y() + Y() + Y() * Y());
  EXPECT_EQ(assemble(next), tutte_deletion_contraction(build_lattice(LatticeFamily::Fractal, 1)));
  EXPECT_EQ(evaluate(assemble(step_fractal(next)), 1, 1), 32768);
}

TEST(StepFlower22, FirstSteps) {
  const TuttePair next = step_flower22(initial_pair());
  EXPECT_EQ(next.t1, C(2) * X() + Y() + C(1));
  EXPECT_EQ(next.cofactor, X() * X() + C(2) * X() + C(1));
  EXPECT_EQ(assemble(next), c4_tutte());
  EXPECT_EQ(evaluate(assemble(step_flower22(next)), 1, 1), 1024);
}

TEST(StepFlower13, FirstSteps) {
  const TuttePair next = step_flower13(initial_pair());
  EXPECT_EQ(next.t1, X() * X() + X() + Y() + C(1));
  EXPECT_EQ(next.cofactor, X() * X() + X() + C(1));
  EXPECT_EQ(assemble(next), c4_tutte());
  EXPECT_EQ(evaluate(assemble(step_flower13(next)), 1, 1), 768);
}

TEST(TutteSymbolic, GoldenGenerationTwo) {
  EXPECT_EQ(tutte_symbolic(LatticeFamily::Fractal, 0), X());
  for (auto family : kAllFamilies) {
    const std::string golden = read_data("tutte_" + std::string(to_string(family)) + "_2.json");
    EXPECT_EQ(to_json(tutte_symbolic(family, 2)) + "\n", golden) << to_string(family);
  }
}

TEST(TutteSymbolic, MatchesOraclesOnBuiltLattices) {
  for (auto family : kAllFamilies) {
    for (unsigned n = 0; n <= 2; ++n) {
      const Multigraph g = build_lattice(family, n);
      const TuttePair& pair = cached_pair(family, n);
      EXPECT_EQ(assemble(pair), tutte_deletion_contraction(g)) << to_string(family) << " n=" << n;
      const auto split = split_tutte(g);
      EXPECT_EQ(pair.t1, split.connected) << to_string(family) << " n=" << n;
      EXPECT_EQ(mul(X() - C(1), pair.cofactor), split.separated) << to_string(family) << " n=" << n;
    }
  }
}

TEST(TutteSymbolic, CapIsEnforcedAndOverridable) {
  EXPECT_THROW(tutte_symbolic(LatticeFamily::Fractal, 5), CapExceeded);
  EXPECT_THROW(tutte_symbolic(LatticeFamily::Fractal, 2, 1), CapExceeded);
  EXPECT_EQ(tutte_symbolic(LatticeFamily::Flower22, 1, 1), c4_tutte());
}

TEST(TutteSymbolic, StructuralInvariantsThroughGenerationFour) {
  for (auto family : kAllFamilies) {
    for (unsigned n = 0; n <= 4; ++n) {
      const TuttePair& pair = cached_pair(family, n);
      const BiPoly t = assemble(pair);
      const LatticeCounts counts = lattice_counts(family, n);
      const auto vertices = static_cast<std::uint32_t>(counts.vertices.get_ui());
      const auto edges = static_cast<std::uint32_t>(counts.edges.get_ui());
      SCOPED_TRACE(std::string(to_string(family)) + " n=" + std::to_string(n));

      EXPECT_EQ(divide_by_x_minus_1(t - pair.t1), pair.cofactor);
      for (const auto& term : t.terms()) ASSERT_GT(term.coeff, 0);
      EXPECT_EQ(t.degree_x(), vertices - 1);
      EXPECT_EQ(t.degree_y(), edges - vertices + 1);
      EXPECT_EQ(evaluate(t, 2, 2), Rational(pow_ui(BigInt(2), edges)));
    }
  }
}

TEST(TutteSymbolic, FractalDiagonal) {
  const BiPoly factor = X() * X() + C(5) * X() + C(2);
  for (unsigned n = 0; n <= 3; ++n) {
    const BiPoly expected = X() * pow(factor, static_cast<unsigned>((pow_ui(BigInt(4), n).get_ui() - 1) / 3));
    EXPECT_EQ(diagonal(assemble(cached_pair(LatticeFamily::Fractal, n))), expected) << "n=" << n;
  }
}

TEST(TutteEval, Examples) {
  EXPECT_EQ(tutte_eval(LatticeFamily::Fractal, 3, 1, 1), Rational(BigInt("9223372036854775808")));
  EXPECT_EQ(tutte_eval(LatticeFamily::Fractal, 2, -1, -1), 32);
  // Frozen from an independent symbolic expansion.
  EXPECT_EQ(tutte_eval(LatticeFamily::Fractal, 2, Rational(1, 2), -3), Rational(4026753, 2048));
  EXPECT_EQ(tutte_eval(LatticeFamily::Flower22, 2, Rational(1, 2), -3), Rational(-87617, 2048));
  EXPECT_EQ(tutte_eval(LatticeFamily::Flower13, 2, Rational(1, 2), -3), Rational(-93521, 2048));
  EXPECT_EQ(tutte_eval(LatticeFamily::Flower13, 2, Rational(-2, 3), Rational(5, 7)),
            Rational(BigInt("4635024997"), BigInt("2977309629")));
  EXPECT_THROW(tutte_eval(LatticeFamily::Fractal, 11, 1, 1), CapExceeded);
}

TEST(TutteEval, HomomorphismWithSymbolic) {
  for (auto family : kAllFamilies) {
    for (unsigned n = 0; n <= 3; ++n) {
      const BiPoly t = assemble(cached_pair(family, n));
      for (int i = 0; i < 25; ++i) {
        const Rational x = random_rational(), y = random_rational();
        ASSERT_EQ(tutte_eval(family, n, x, y), evaluate(t, x, y)) << to_string(family) << " n=" << n;
      }
    }
  }
}

TEST(TutteEval, MatchesSubgraphSumOnSmallLattices) {
  for (auto family : kAllFamilies) {
    const Multigraph g = build_lattice(family, 1);
    for (int i = 0; i < 10; ++i) {
      const Rational x = random_rational(), y = random_rational();
      ASSERT_EQ(tutte_eval(family, 1, x, y), reference_tutte_value(g, x, y));
    }
  }
}

TEST(Recursion, ParallelAndSerialStepsAgree) {
  const TuttePair& base = cached_pair(LatticeFamily::Fractal, 2);
  setenv("FRACTAL_TUTTE_THREADS", "1", 1);
  const TuttePair serial = step_fractal(base);
  setenv("FRACTAL_TUTTE_THREADS", "4", 1);
  const TuttePair parallel = step_fractal(base);
  unsetenv("FRACTAL_TUTTE_THREADS");
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(to_json(assemble(serial)), to_json(assemble(parallel)));
}
