#pragma once

// Explicit construction of the three self-similar lattice families.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fractal_tutte/numbers.hpp"

namespace fractal_tutte {

enum class LatticeFamily { Fractal, Flower22, Flower13 };

inline constexpr std::array<LatticeFamily, 3> kAllFamilies = {
    LatticeFamily::Fractal, LatticeFamily::Flower22, LatticeFamily::Flower13};

/// "fractal", "flower22" or "flower13".
std::string_view to_string(LatticeFamily family);
LatticeFamily parse_family(std::string_view name);

struct Edge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;  // a == b encodes a loop

  bool is_loop() const { return a == b; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertices 0..vertex_count-1 with an ordered edge list (loops and parallel
/// edges allowed) and two marked vertices. The constructor validates indices
/// and requires distinct marks whenever there are at least two vertices.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::uint32_t vertex_count, std::vector<Edge> edges, std::uint32_t special_x = 0,
             std::uint32_t special_y = 1);

  std::uint32_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::uint32_t special_x() const { return special_x_; }
  std::uint32_t special_y() const { return special_y_; }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::uint32_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::uint32_t special_x_ = 0;
  std::uint32_t special_y_ = 0;
};

inline constexpr unsigned kMaxLatticeGeneration = 12;

/// Generation n of a family. Generation 0 is a single edge between the two
/// special vertices; generation n+1 glues four copies of generation n in a
/// ring (Y of copy i onto X of copy i+1, Y of copy 4 onto X of copy 1).
/// Fractal marks the hubs (4,1) and (2,3) and joins hubs (1,2)-(3,4) by an
/// extra edge; Flower22 keeps the same marks without the edge; Flower13 marks
/// the adjacent hubs (4,1) and (1,2).
///
/// Numbering: special_x is 0, special_y is the last vertex, and the rest are
/// numbered by first appearance walking copies 1..4 in order. Edges list the
/// four copies in order, followed by the extra fractal edge.
///
/// Throws CapExceeded for n > kMaxLatticeGeneration.
Multigraph build_lattice(LatticeFamily family, unsigned n);

struct LatticeCounts {
  BigInt vertices;
  BigInt edges;
};

/// Closed-form order and size; no generation cap.
LatticeCounts lattice_counts(LatticeFamily family, unsigned long n);

/// Vertex degrees sorted ascending; a loop adds 2 to its vertex.
std::vector<std::uint64_t> degree_sequence(const Multigraph& g);

std::size_t component_count(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// "p <vertices> <edges> <special_x> <special_y>\n" followed by "e <a> <b>\n"
/// per edge, 0-based.
std::string to_edge_list(const Multigraph& g);
Multigraph parse_edge_list(std::string_view text);

/// {"vertices":V,"special_x":sx,"special_y":sy,"edges":[[a,b],...]}
std::string graph_to_json(const Multigraph& g);

}  // namespace fractal_tutte
