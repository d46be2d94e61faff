#include "fractal_tutte/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fractal_tutte/errors.hpp"
#include "fractal_tutte/invariants.hpp"
#include "fractal_tutte/oracle.hpp"
#include "fractal_tutte/recursion.hpp"
#include "fractal_tutte/verify.hpp"

namespace fractal_tutte {

namespace {

using ordered_json = nlohmann::ordered_json;

// Raw flag values; everything numeric stays a string until validated.
struct CommandSpec {
  std::string family;
  std::string n;
  std::string n_max;
  std::string mode = "recursive";
  std::string x, y, q, v;
  std::string quantity;
  std::string format;
  std::string out;
  std::string graph;
  std::string symbolic_cap = std::to_string(kDefaultSymbolicCap);
};

// Non-negative integer flag. Negative or malformed values are usage errors;
// values beyond 32 bits are necessarily above every cap.
unsigned parse_count(const std::string& flag, const std::string& text) {
  BigInt value;
  try {
    value = parse_bigint(text);
  } catch (const ParseError&) {
    throw ParseError("--" + flag + " must be a non-negative integer, got '" + text + "'");
  }
  if (value < 0) throw ParseError("--" + flag + " must be non-negative, got '" + text + "'");
  if (value > 1000000) throw CapExceeded("--" + flag + " value " + text + " exceeds every cap");
  return static_cast<unsigned>(value.get_ui());
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw ParseError("--" + flag + ": " + e.what());
  }
}

ordered_json rational_json(const Rational& value) {
  if (is_integer(value)) return to_decimal(value.get_num());
  ordered_json out;
  out["num"] = to_decimal(value.get_num());
  out["den"] = to_decimal(value.get_den());
  return out;
}

ordered_json record(LatticeFamily family, unsigned n, const std::string& quantity) {
  ordered_json doc;
  doc["family"] = std::string(to_string(family));
  doc["n"] = n;
  doc["quantity"] = quantity;
  return doc;
}

std::string require_format(const std::string& format, const std::string& fallback) {
  const std::string chosen = format.empty() ? fallback : format;
  if (chosen != "text" && chosen != "json") {
    throw ParseError("--format must be text or json, got '" + format + "'");
  }
  return chosen;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string cmd_gen(const CommandSpec& spec) {
  const auto family = parse_family(spec.family);
  const unsigned n = parse_count("n", spec.n);
  const std::string format = require_format(spec.format, "text");
  const Multigraph g = build_lattice(family, n);
  return format == "text" ? to_edge_list(g) : graph_to_json(g) + "\n";
}

std::string cmd_tutte(const CommandSpec& spec) {
  const std::string format = require_format(spec.format, "json");
  const unsigned cap = parse_count("symbolic-cap", spec.symbolic_cap);
  BiPoly result;
  if (spec.mode == "oracle") {
    if (!spec.graph.empty()) {
      if (!spec.family.empty() || !spec.n.empty()) throw ParseError("--graph excludes --family/--n");
      result = tutte_deletion_contraction(parse_edge_list(read_file(spec.graph)));
    } else {
      if (spec.family.empty() || spec.n.empty()) throw ParseError("tutte needs --family and --n");
      const auto family = parse_family(spec.family);
      const unsigned n = parse_count("n", spec.n);
      if (n > kVerifyOracleCap) {
        throw CapExceeded("oracle mode is limited to n <= " + std::to_string(kVerifyOracleCap));
      }
      result = tutte_deletion_contraction(build_lattice(family, n));
    }
  } else if (spec.mode == "recursive") {
    if (!spec.graph.empty()) throw ParseError("--graph requires --mode oracle");
    if (spec.family.empty() || spec.n.empty()) throw ParseError("tutte needs --family and --n");
    const auto family = parse_family(spec.family);
    result = tutte_symbolic(family, parse_count("n", spec.n), cap);
  } else {
    throw ParseError("--mode must be recursive or oracle, got '" + spec.mode + "'");
  }
  return (format == "json" ? to_json(result) : to_string(result)) + "\n";
}

std::string emit(const ordered_json& doc, const std::string& format) {
  if (format == "json") return doc.dump() + "\n";
  const auto& value = doc["value"];
  if (value.is_string()) return value.get<std::string>() + "\n";
  if (value.is_object() && value.contains("num")) {
    return value["num"].get<std::string>() + "/" + value["den"].get<std::string>() + "\n";
  }
  return value.dump() + "\n";
}

std::string cmd_eval(const CommandSpec& spec) {
  const auto family = parse_family(spec.family);
  const unsigned n = parse_count("n", spec.n);
  const std::string format = require_format(spec.format, "json");
  const Rational x = parse_rational_flag("x", spec.x);
  const Rational y = parse_rational_flag("y", spec.y);
  ordered_json doc = record(family, n, "tutte-value");
  doc["x"] = to_string(x);
  doc["y"] = to_string(y);
  doc["value"] = rational_json(tutte_eval(family, n, x, y));
  return emit(doc, format);
}

std::string cmd_invariant(const CommandSpec& spec) {
  const auto family = parse_family(spec.family);
  const unsigned n = parse_count("n", spec.n);
  const std::string format = require_format(spec.format, "json");
  const std::string& quantity = spec.quantity;
  auto fractal_only = [&] {
    if (family != LatticeFamily::Fractal) {
      throw DomainError("quantity '" + quantity + "' is only available for the fractal family");
    }
  };

  ordered_json doc = record(family, n, quantity);
  if (quantity == "spanning-trees") {
    doc["value"] = to_decimal(spanning_trees_closed(family, n));
  } else if (quantity == "acyclic-root-connected") {
    fractal_only();
    doc["value"] = to_decimal(acyclic_root_connected(n));
  } else if (quantity == "indegree-sequences-strong") {
    fractal_only();
    doc["value"] = to_decimal(indegree_sequences_strong(n));
  } else if (quantity == "bicycle-dimension") {
    fractal_only();
    doc["value"] = to_decimal(bicycle_dimension(n));
  } else if (quantity == "diagonal") {
    fractal_only();
    const BiPoly poly = diagonal_closed(n, parse_count("symbolic-cap", spec.symbolic_cap));
    if (format == "text") return to_string(poly) + "\n";
    doc["value"] = ordered_json::parse(to_json(poly));
  } else if (quantity == "vertices" || quantity == "edges") {
    const LatticeCounts counts = lattice_counts(family, n);
    doc["value"] = to_decimal(quantity == "vertices" ? counts.vertices : counts.edges);
  } else {
    throw ParseError("unknown --quantity '" + quantity +
                     "' (spanning-trees, acyclic-root-connected, indegree-sequences-strong, "
                     "bicycle-dimension, diagonal, vertices, edges)");
  }
  return emit(doc, format);
}

std::string cmd_potts(const CommandSpec& spec) {
  const auto family = parse_family(spec.family);
  const unsigned n = parse_count("n", spec.n);
  const std::string format = require_format(spec.format, "json");
  const PottsParams params{parse_rational_flag("q", spec.q), parse_rational_flag("v", spec.v)};
  ordered_json doc = record(family, n, "potts-partition");
  doc["q"] = to_string(params.q);
  doc["v"] = to_string(params.v);
  doc["value"] = rational_json(potts_lattice(family, n, params));
  return emit(doc, format);
}

std::string cmd_growth(const CommandSpec& spec) {
  const auto family = parse_family(spec.family);
  const unsigned n_max = parse_count("n-max", spec.n_max);
  const std::string format = require_format(spec.format, "json");
  if (n_max < 1) throw ParseError("--n-max must be at least 1");
  const GrowthConstant growth = growth_constant(family, n_max);
  if (format == "text") {
    std::ostringstream text;
    text << growth.exact << " = " << std::setprecision(17) << growth.decimal << "\n";
    for (const auto& [n, ratio] : growth.sequence) text << n << ' ' << std::setprecision(17) << ratio << "\n";
    return text.str();
  }
  ordered_json doc = record(family, n_max, "growth-constant");
  doc["exact"] = growth.exact;
  doc["decimal"] = growth.decimal;
  auto sequence = ordered_json::array();
  for (const auto& [n, ratio] : growth.sequence) {
    ordered_json entry;
    entry["n"] = n;
    entry["value"] = ratio;
    sequence.push_back(std::move(entry));
  }
  doc["sequence"] = std::move(sequence);
  return doc.dump() + "\n";
}

struct VerifyOutcome {
  std::string report;
  std::optional<GateResult> first_failure;
};

VerifyOutcome cmd_verify(const CommandSpec& spec) {
  const std::string format = require_format(spec.format, "text");
  VerifyOptions options;
  options.oracle_n_max = parse_count("n-max", spec.n_max.empty() ? "2" : spec.n_max);
  if (options.oracle_n_max > kVerifyOracleCap) {
    throw ParseError("verify --n-max must be at most " + std::to_string(kVerifyOracleCap));
  }
  const auto results = run_verification(options);

  VerifyOutcome outcome;
  for (const auto& gate : results) {
    if (!gate.passed && !outcome.first_failure) outcome.first_failure = gate;
  }
  if (format == "json") {
    ordered_json doc;
    auto gates = ordered_json::array();
    for (const auto& gate : results) {
      ordered_json entry;
      entry["name"] = gate.name;
      entry["passed"] = gate.passed;
      entry["detail"] = gate.detail;
      gates.push_back(std::move(entry));
    }
    doc["gates"] = std::move(gates);
    doc["passed"] = !outcome.first_failure.has_value();
    outcome.report = doc.dump() + "\n";
  } else {
    std::ostringstream text;
    for (const auto& gate : results) {
      text << std::left << std::setw(6) << (gate.passed ? "PASS" : "FAIL") << std::setw(48) << gate.name
           << gate.detail << "\n";
    }
    outcome.report = text.str();
  }
  return outcome;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Tutte polynomials of self-similar lattices", "fractal-tutte"};
  app.require_subcommand(1);
  CommandSpec spec;

  auto add_family_n = [&spec](CLI::App* sub) {
    sub->add_option("--family", spec.family, "fractal | flower22 | flower13")->required();
    sub->add_option("--n", spec.n, "generation")->required();
  };
  auto add_output = [&spec](CLI::App* sub) {
    sub->add_option("--format", spec.format, "text | json");
    sub->add_option("--out", spec.out, "write results to this file instead of stdout");
  };

  auto* gen = app.add_subcommand("gen", "emit a lattice as an edge list or JSON");
  add_family_n(gen);
  add_output(gen);

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of a lattice generation");
  tutte->add_option("--family", spec.family, "fractal | flower22 | flower13");
  tutte->add_option("--n", spec.n, "generation");
  tutte->add_option("--mode", spec.mode, "recursive | oracle");
  tutte->add_option("--graph", spec.graph, "edge-list file for --mode oracle");
  tutte->add_option("--symbolic-cap", spec.symbolic_cap, "largest generation for symbolic recursion");
  add_output(tutte);

  auto* eval = app.add_subcommand("eval", "exact T_n(x, y)");
  add_family_n(eval);
  eval->add_option("--x", spec.x, "integer or p/q")->required();
  eval->add_option("--y", spec.y, "integer or p/q")->required();
  add_output(eval);

  auto* invariant = app.add_subcommand("invariant", "closed-form special values");
  add_family_n(invariant);
  invariant->add_option("--quantity", spec.quantity, "which value")->required();
  invariant->add_option("--symbolic-cap", spec.symbolic_cap, "largest generation for the diagonal");
  add_output(invariant);

  auto* potts = app.add_subcommand("potts", "zero-field Potts partition function");
  add_family_n(potts);
  potts->add_option("--q", spec.q, "number of states")->required();
  potts->add_option("--v", spec.v, "coupling, nonzero")->required();
  add_output(potts);

  auto* growth = app.add_subcommand("growth", "spanning-tree growth constant");
  growth->add_option("--family", spec.family, "fractal | flower22 | flower13")->required();
  growth->add_option("--n-max", spec.n_max, "last generation of the finite sequence")->required();
  add_output(growth);

  auto* verify = app.add_subcommand("verify", "run the oracle and closed-form gates");
  verify->add_option("--n-max", spec.n_max, "largest generation for the oracle gates (<= 2)");
  add_output(verify);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string output;
    int status = kExitOk;
    if (gen->parsed()) {
      output = cmd_gen(spec);
    } else if (tutte->parsed()) {
      output = cmd_tutte(spec);
    } else if (eval->parsed()) {
      output = cmd_eval(spec);
    } else if (invariant->parsed()) {
      output = cmd_invariant(spec);
    } else if (potts->parsed()) {
      output = cmd_potts(spec);
    } else if (growth->parsed()) {
      output = cmd_growth(spec);
    } else if (verify->parsed()) {
      auto outcome = cmd_verify(spec);
      output = std::move(outcome.report);
      if (outcome.first_failure) {
        err << "verification failed: " << outcome.first_failure->name << ": "
            << outcome.first_failure->detail << "\n";
        status = kExitVerifyFailed;
      }
    }

    if (spec.out.empty()) {
      out << output;
      out.flush();
    } else {
      std::ofstream file(spec.out, std::ios::binary);
      if (!file) throw ParseError("cannot write '" + spec.out + "'");
      file << output;
    }
    return status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace fractal_tutte
