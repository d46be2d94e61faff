#include "fractal_tutte/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "fractal_tutte/errors.hpp"

namespace fractal_tutte {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

Multigraph next_generation(LatticeFamily family, const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  auto slot = [n](std::size_t copy, std::uint32_t v) { return copy * n + v; };

  DisjointSets sets(4 * n);
  for (std::size_t copy = 0; copy < 4; ++copy) {
    sets.unite(slot(copy, g.special_y()), slot((copy + 1) % 4, g.special_x()));
  }
  // Hub (i, i+1) is Y of copy i; copies are 0-based here.
  const std::size_t hub41 = sets.find(slot(3, g.special_y()));
  const std::size_t hub12 = sets.find(slot(0, g.special_y()));
  const std::size_t hub23 = sets.find(slot(1, g.special_y()));
  const std::size_t hub34 = sets.find(slot(2, g.special_y()));

  const std::size_t new_x = hub41;
  const std::size_t new_y = family == LatticeFamily::Flower13 ? hub12 : hub23;

  const std::uint32_t vertex_count = static_cast<std::uint32_t>(4 * n - 4);
  std::vector<std::uint32_t> label(4 * n, UINT32_MAX);
  label[new_x] = 0;
  label[new_y] = vertex_count - 1;
  std::uint32_t next = 1;
  for (std::size_t s = 0; s < 4 * n; ++s) {
    std::size_t root = sets.find(s);
    if (label[root] == UINT32_MAX) label[root] = next++;
  }

  std::vector<Edge> edges;
  edges.reserve(4 * g.edge_count() + 1);
  for (std::size_t copy = 0; copy < 4; ++copy) {
    for (const auto& e : g.edges()) {
      edges.push_back(Edge{label[sets.find(slot(copy, e.a))], label[sets.find(slot(copy, e.b))]});
    }
  }
  if (family == LatticeFamily::Fractal) edges.push_back(Edge{label[hub12], label[hub34]});

  return Multigraph(vertex_count, std::move(edges), 0, vertex_count - 1);
}

}  // namespace

std::string_view to_string(LatticeFamily family) {
  switch (family) {
    case LatticeFamily::Fractal:
      return "fractal";
    case LatticeFamily::Flower22:
      return "flower22";
    case LatticeFamily::Flower13:
      return "flower13";
  }
  return "unknown";
}

LatticeFamily parse_family(std::string_view name) {
  for (auto family : kAllFamilies) {
    if (to_string(family) == name) return family;
  }
  throw ParseError("unknown lattice family '" + std::string(name) +
                   "' (expected fractal, flower22 or flower13)");
}

Multigraph::Multigraph(std::uint32_t vertex_count, std::vector<Edge> edges, std::uint32_t special_x,
                       std::uint32_t special_y)
    : vertex_count_(vertex_count), edges_(std::move(edges)), special_x_(special_x), special_y_(special_y) {
  for (const auto& e : edges_) {
    if (e.a >= vertex_count_ || e.b >= vertex_count_) {
      throw DomainError("edge endpoint out of range");
    }
  }
  if (vertex_count_ >= 2) {
    if (special_x_ >= vertex_count_ || special_y_ >= vertex_count_) {
      throw DomainError("special vertex out of range");
    }
    if (special_x_ == special_y_) throw DomainError("special vertices must be distinct");
  } else {
    special_x_ = 0;
    special_y_ = 0;
  }
}

Multigraph build_lattice(LatticeFamily family, unsigned n) {
  if (n > kMaxLatticeGeneration) {
    throw CapExceeded("lattice generation " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxLatticeGeneration));
  }
  Multigraph g(2, {Edge{0, 1}}, 0, 1);
  for (unsigned level = 0; level < n; ++level) g = next_generation(family, g);
  return g;
}

LatticeCounts lattice_counts(LatticeFamily family, unsigned long n) {
  const BigInt four_n = pow_ui(BigInt(4), n);
  LatticeCounts counts;
  counts.vertices = (2 * four_n + 4) / 3;
  counts.edges = family == LatticeFamily::Fractal ? BigInt((4 * four_n - 1) / 3) : four_n;
  return counts;
}

std::vector<std::uint64_t> degree_sequence(const Multigraph& g) {
  std::vector<std::uint64_t> degrees(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++degrees[e.a];
    ++degrees[e.b];
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::size_t component_count(const Multigraph& g) {
  DisjointSets sets(g.vertex_count());
  std::size_t components = g.vertex_count();
  for (const auto& e : g.edges()) {
    if (sets.unite(e.a, e.b)) --components;
  }
  return components;
}

bool is_connected(const Multigraph& g) { return component_count(g) <= 1; }

std::string to_edge_list(const Multigraph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) +
                    ' ' + std::to_string(g.special_x()) + ' ' + std::to_string(g.special_y()) + '\n';
  out.reserve(out.size() + g.edge_count() * 12);
  for (const auto& e : g.edges()) {
    out += "e ";
    out += std::to_string(e.a);
    out += ' ';
    out += std::to_string(e.b);
    out += '\n';
  }
  return out;
}

Multigraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  std::uint64_t vertices = 0, declared_edges = 0, sx = 0, sy = 0;
  std::vector<Edge> edges;
  std::size_t line_number = 0;
  auto fail = [&line_number](const std::string& what) {
    throw ParseError("edge list line " + std::to_string(line_number) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (have_header) fail("duplicate header");
      if (!(fields >> vertices >> declared_edges >> sx >> sy)) fail("malformed header");
      if (vertices > UINT32_MAX) fail("too many vertices");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge before header");
      std::uint64_t a = 0, b = 0;
      if (!(fields >> a >> b)) fail("malformed edge");
      if (a >= vertices || b >= vertices) fail("endpoint out of range");
      edges.push_back(Edge{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
    } else {
      fail("unknown record '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) fail("trailing data");
  }
  if (!have_header) throw ParseError("edge list has no header");
  if (edges.size() != declared_edges) {
    throw ParseError("edge list declares " + std::to_string(declared_edges) + " edges but has " +
                     std::to_string(edges.size()));
  }
  if (vertices >= 2 && (sx >= vertices || sy >= vertices || sx == sy)) {
    throw ParseError("special vertices must be distinct and in range");
  }
  return Multigraph(static_cast<std::uint32_t>(vertices), std::move(edges),
                    static_cast<std::uint32_t>(sx), static_cast<std::uint32_t>(sy));
}

std::string graph_to_json(const Multigraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertex_count();
  doc["special_x"] = g.special_x();
  doc["special_y"] = g.special_y();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.a, e.b});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

}  // namespace fractal_tutte
