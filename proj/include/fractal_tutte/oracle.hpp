#pragma once

// Ground-truth Tutte polynomials for small multigraphs.

#include <cstdint>

#include "fractal_tutte/bipoly.hpp"
#include "fractal_tutte/lattice.hpp"

namespace fractal_tutte {

inline constexpr std::size_t kDeletionContractionEdgeCap = 64;
inline constexpr std::size_t kExpansionEdgeCap = 24;

/// Rank, nullity and component count of the spanning subgraph selected by
/// `mask` (bit i keeps edge i).
struct SubgraphStats {
  std::uint32_t rank = 0;
  std::uint32_t nullity = 0;
  std::uint32_t components = 0;
};

SubgraphStats subgraph_stats(const Multigraph& g, std::uint64_t mask);

/// Memoized deletion-contraction. Throws CapExceeded above 64 edges.
BiPoly tutte_deletion_contraction(const Multigraph& g);

/// Sum over all 2^|E| spanning subgraphs of (x-1)^(r(G)-r(H)) (y-1)^n(H).
/// Throws CapExceeded above 24 edges.
BiPoly tutte_subgraph_expansion(const Multigraph& g);

/// The expansion split by whether the special vertices share a component.
struct SplitTutte {
  BiPoly connected;  // special_x and special_y in one component of H
  BiPoly separated;  // everything else
};

SplitTutte split_tutte(const Multigraph& g);

/// Number of edge subsets forming a spanning tree. Throws CapExceeded above 24 edges.
BigInt count_spanning_trees_bruteforce(const Multigraph& g);

}  // namespace fractal_tutte
