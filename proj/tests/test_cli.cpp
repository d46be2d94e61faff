#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fractal_tutte/cli.hpp"
#include "fractal_tutte/verify.hpp"

using namespace fractal_tutte;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "fractal-tutte");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const CliResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(CliGen, FractalGenerationOne) {
  const CliResult r = run({"gen", "--family", "fractal", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "p 4 5 0 3\ne 0 1\ne 1 3\ne 3 2\ne 2 0\ne 1 2\n");
}

TEST(CliGen, Flower22GenerationZero) {
  const CliResult r = run({"gen", "--family", "flower22", "--n", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p 2 1 0 1\ne 0 1\n");
}

TEST(CliGen, JsonFormat) {
  const CliResult r = run({"gen", "--family", "flower13", "--n", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = json_of(r);
  EXPECT_EQ(doc["vertices"], 4);
  EXPECT_EQ(doc["edges"].size(), 4u);
}

TEST(CliGen, CapViolation) {
  const CliResult r = run({"gen", "--family", "fractal", "--n", "99"});
  EXPECT_EQ(r.code, kExitCap);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTutte, GenerationZero) {
  const CliResult r = run({"tutte", "--family", "fractal", "--n", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"terms\":[{\"x\":1,\"y\":0,\"c\":\"1\"}]}\n");
}

TEST(CliTutte, OracleAndRecursiveAgreeByteForByte) {
  for (const char* family : {"fractal", "flower22", "flower13"}) {
    for (const char* n : {"0", "1", "2"}) {
      const CliResult oracle = run({"tutte", "--family", family, "--n", n, "--mode", "oracle"});
      const CliResult recursive = run({"tutte", "--family", family, "--n", n, "--mode", "recursive"});
      ASSERT_EQ(oracle.code, 0) << oracle.err;
      ASSERT_EQ(recursive.code, 0) << recursive.err;
      EXPECT_EQ(oracle.out, recursive.out) << family << " " << n;
    }
  }
}

TEST(CliTutte, Flower13IsTheFourCycle) {
  const CliResult r = run({"tutte", "--family", "flower13", "--n", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"terms\":[{\"x\":3,\"y\":0,\"c\":\"1\"},{\"x\":2,\"y\":0,\"c\":\"1\"},"
            "{\"x\":1,\"y\":0,\"c\":\"1\"},{\"x\":0,\"y\":1,\"c\":\"1\"}]}\n");
  const CliResult text = run({"tutte", "--family", "flower13", "--n", "1", "--format", "text"});
  EXPECT_EQ(text.out, "x^3+x^2+x+y\n");
}

TEST(CliTutte, OracleOnGraphFile) {
  const auto path = std::filesystem::temp_directory_path() / "fractal_tutte_cli_graph.edges";
  {
    std::ofstream file(path);
    file << "p 3 3 0 2\ne 0 1\ne 1 2\ne 2 0\n";
  }
  const CliResult r = run({"tutte", "--mode", "oracle", "--graph", path.string(), "--format", "text"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "x^2+x+y\n");
  EXPECT_EQ(run({"tutte", "--mode", "recursive", "--graph", path.string()}).code, kExitUsage);
}

TEST(CliTutte, Caps) {
  EXPECT_EQ(run({"tutte", "--family", "fractal", "--n", "3", "--mode", "oracle"}).code, kExitCap);
  EXPECT_EQ(run({"tutte", "--family", "fractal", "--n", "5"}).code, kExitCap);
  EXPECT_EQ(run({"tutte", "--family", "fractal", "--n", "2", "--symbolic-cap", "1"}).code, kExitCap);
  EXPECT_EQ(run({"tutte", "--family", "fractal", "--n", "1", "--mode", "magic"}).code, kExitUsage);
}

TEST(CliInvariant, SpanningTreesAtThree) {
  const CliResult r = run({"invariant", "--family", "fractal", "--n", "3", "--quantity", "spanning-trees"});
  ASSERT_EQ(r.code, 0);
  const auto doc = json_of(r);
  EXPECT_EQ(doc["value"], "9223372036854775808");
  EXPECT_EQ(doc["family"], "fractal");
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["quantity"], "spanning-trees");
  const CliResult text = run({"invariant", "--family", "fractal", "--n", "3", "--quantity", "spanning-trees",
                        "--format", "text"});
  EXPECT_EQ(text.out, "9223372036854775808\n");
}

TEST(CliInvariant, OtherQuantities) {
  auto value = [](const std::string& family, const std::string& n, const std::string& q) {
    const CliResult r = run({"invariant", "--family", family, "--n", n, "--quantity", q});
    EXPECT_EQ(r.code, 0) << r.err;
    return json_of(r)["value"];
  };
  EXPECT_EQ(value("fractal", "2", "acyclic-root-connected"), "2304");
  EXPECT_EQ(value("fractal", "1", "indegree-sequences-strong"), "2");
  EXPECT_EQ(value("fractal", "3", "bicycle-dimension"), "21");
  EXPECT_EQ(value("flower13", "2", "spanning-trees"), "768");
  EXPECT_EQ(value("fractal", "6", "vertices"), "2732");
  EXPECT_EQ(value("fractal", "1", "diagonal")["terms"].size(), 3u);
  EXPECT_EQ(run({"invariant", "--family", "fractal", "--n", "0", "--quantity", "indegree-sequences-strong"}).code,
            kExitDomain);
  EXPECT_EQ(run({"invariant", "--family", "flower22", "--n", "1", "--quantity", "bicycle-dimension"}).code,
            kExitDomain);
  EXPECT_EQ(run({"invariant", "--family", "fractal", "--n", "1", "--quantity", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(run({"invariant", "--family", "fractal", "--n", "11", "--quantity", "spanning-trees"}).code, kExitCap);
}

TEST(CliEval, BicyclePoint) {
  const CliResult r = run({"eval", "--family", "fractal", "--n", "2", "--x", "-1", "--y", "-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["value"], "32");
}

TEST(CliEval, RationalResult) {
  const CliResult r = run({"eval", "--family", "fractal", "--n", "2", "--x", "1/2", "--y", "-3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json_of(r);
  EXPECT_EQ(doc["value"]["num"], "4026753");
  EXPECT_EQ(doc["value"]["den"], "2048");
  EXPECT_EQ(doc["x"], "1/2");
  EXPECT_EQ(run({"eval", "--family", "fractal", "--n", "2", "--x", "0.5", "--y", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "--family", "fractal", "--n", "2", "--x", "1/0", "--y", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "--family", "fractal", "--n", "11", "--x", "1", "--y", "1"}).code, kExitCap);
}

TEST(CliPotts, Values) {
  const CliResult r = run({"potts", "--family", "fractal", "--n", "1", "--q", "2", "--v", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["value"], "132");
  const CliResult zero = run({"potts", "--family", "fractal", "--n", "1", "--q", "2", "--v", "0"});
  EXPECT_EQ(zero.code, kExitDomain);
  EXPECT_TRUE(zero.out.empty());
}

TEST(CliGrowth, Flower13) {
  const CliResult r = run({"growth", "--family", "flower13", "--n-max", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json_of(r);
  EXPECT_EQ(doc["exact"], "(1/6)*(4*ln(2)+ln(3))");
  EXPECT_NEAR(doc["decimal"].get<double>(), 0.6452, 5e-5);
  EXPECT_EQ(doc["sequence"].size(), 8u);
  EXPECT_NEAR(doc["sequence"][7]["value"].get<double>(), 0.6452, 1e-3);
}

TEST(CliVerify, AllGatesPass) {
  const CliResult r = run({"verify", "--n-max", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.rfind("PASS", 0), 0u) << line;
    ++rows;
  }
  EXPECT_GE(rows, 10);
}

TEST(CliVerify, OracleCap) {
  const CliResult r = run({"verify", "--n-max", "3"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(r.out.empty());
}

TEST(Verify, PerturbedFractalStepIsCaught) {
  StepTable broken = step_table(LatticeFamily::Fractal);
  broken.connected[1] = broken.connected[1] + BiPoly::constant(1);
  VerifyOptions options;
  options.tables[0] = &broken;
  const auto results = run_verification(options);
  const GateResult* first = nullptr;
  for (const auto& gate : results) {
    if (!gate.passed) {
      first = &gate;
      break;
    }
  }
  ASSERT_NE(first, nullptr);
  EXPECT_EQ(first->name, "fractal recursion vs oracles");
  EXPECT_FALSE(first->detail.empty());
  for (const auto& gate : results) {
    if (gate.name.rfind("flower", 0) == 0) EXPECT_TRUE(gate.passed) << gate.name;
  }
}

TEST(CliErrors, UsageCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--family", "fractal"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--family", "triangle", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--family", "fractal", "--n", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--family", "fractal", "--n", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--family", "fractal", "--n", "1", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--family", "fractal", "--n", "99999999999999"}).code, kExitCap);
}

TEST(CliErrors, NothingOnStdoutOnFailure) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gen", "--family", "fractal", "--n", "99"},
           {"eval", "--family", "fractal", "--n", "1", "--x", "a", "--y", "1"},
           {"invariant", "--family", "fractal", "--n", "0", "--quantity", "indegree-sequences-strong"},
           {"tutte", "--family", "fractal", "--n", "9"}}) {
    const CliResult r = run(args);
    EXPECT_NE(r.code, 0);
    EXPECT_TRUE(r.out.empty()) << r.out;
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(CliOutput, Deterministic) {
  const std::vector<std::string> args{"tutte", "--family", "flower13", "--n", "3"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const CliResult g1 = run({"growth", "--family", "fractal", "--n-max", "6"});
  const CliResult g2 = run({"growth", "--family", "fractal", "--n-max", "6"});
  EXPECT_EQ(g1.out, g2.out);
}

TEST(CliOutput, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "fractal_tutte_cli_out.txt";
  std::filesystem::remove(path);
  const CliResult r = run({"gen", "--family", "fractal", "--n", "1", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "p 4 5 0 3\ne 0 1\ne 1 3\ne 3 2\ne 2 0\ne 1 2\n");
  std::filesystem::remove(path);

  const auto missing = std::filesystem::temp_directory_path() / "fractal_tutte_cli_failed.txt";
  std::filesystem::remove(missing);
  EXPECT_EQ(run({"gen", "--family", "fractal", "--n", "99", "--out", missing.string()}).code, kExitCap);
  EXPECT_FALSE(std::filesystem::exists(missing));
}
