#include "fractal_tutte/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fractal_tutte/errors.hpp"
#include "fractal_tutte/parallel.hpp"

namespace fractal_tutte {

namespace {

// Small union-find over a reusable buffer; reset() is O(n).
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { reset(); }

  void reset() { std::iota(parent_.begin(), parent_.end(), std::uint32_t{0}); }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

void require_edges_at_most(const Multigraph& g, std::size_t cap, const char* what) {
  if (g.edge_count() > cap) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(g.edge_count()) +
                      " edges exceeds cap " + std::to_string(cap));
  }
}

// 1 + y + ... + y^(count-1), plus `lead` in front when nonzero.
BiPoly geometric_y(std::uint32_t count, const BiPoly& lead) {
  std::vector<Term> terms;
  for (std::uint32_t j = 0; j < count; ++j) terms.push_back(Term{0, j, 1});
  return add(BiPoly::from_terms(std::move(terms)), lead);
}

// ---------------------------------------------------------------------------
// Deletion-contraction

// Loop-free multigraph; every edge stored with a < b.
struct WorkGraph {
  std::uint32_t vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

// Drops isolated vertices and renumbers the rest in order.
WorkGraph compact(const WorkGraph& g) {
  std::vector<std::uint32_t> label(g.vertices, UINT32_MAX);
  for (const auto& [a, b] : g.edges) label[a] = label[b] = 0;
  std::uint32_t next = 0;
  for (auto& l : label) {
    if (l != UINT32_MAX) l = next++;
  }
  WorkGraph out{next, {}};
  out.edges.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges) out.edges.emplace_back(label[a], label[b]);
  return out;
}

std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adjacency(const WorkGraph& g) {
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(g.vertices);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [a, b] = g.edges[i];
    adj[a].emplace_back(b, i);
    adj[b].emplace_back(a, i);
  }
  return adj;
}

// Tarjan lowlink over edge ids, so parallel edges are never bridges.
std::vector<bool> find_bridges(const WorkGraph& g) {
  const auto adj = adjacency(g);
  std::vector<bool> bridge(g.edges.size(), false);
  std::vector<std::uint32_t> order(g.vertices, 0), low(g.vertices, 0);
  std::uint32_t counter = 0;
  std::function<void(std::uint32_t, std::size_t)> visit = [&](std::uint32_t v, std::size_t via) {
    order[v] = low[v] = ++counter;
    for (auto [w, id] : adj[v]) {
      if (id == via) continue;
      if (order[w] == 0) {
        visit(w, id);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > order[v]) bridge[id] = true;
      } else {
        low[v] = std::min(low[v], order[w]);
      }
    }
  };
  for (std::uint32_t v = 0; v < g.vertices; ++v) {
    if (order[v] == 0) visit(v, SIZE_MAX);
  }
  return bridge;
}

// Merges the endpoints of every flagged edge and removes those edges.
WorkGraph contract_edges(const WorkGraph& g, const std::vector<bool>& contract) {
  UnionFind sets(g.vertices);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (contract[i]) sets.unite(g.edges[i].first, g.edges[i].second);
  }
  std::vector<std::uint32_t> label(g.vertices, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < g.vertices; ++v) {
    auto root = sets.find(v);
    if (label[root] == UINT32_MAX) label[root] = next++;
  }
  WorkGraph out{next, {}};
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (contract[i]) continue;
    auto a = label[sets.find(g.edges[i].first)];
    auto b = label[sets.find(g.edges[i].second)];
    out.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

// Relabels vertices by iterated color refinement (ties broken by index) and
// returns [vertices, a0, b0, a1, b1, ...] with edges sorted. Equal keys imply
// isomorphic graphs; isomorphic graphs usually, but not always, share a key.
std::vector<std::uint32_t> memo_key(const WorkGraph& g) {
  const auto adj = adjacency(g);
  std::vector<std::uint32_t> color(g.vertices, 0);
  std::size_t classes = 1;
  for (std::uint32_t round = 0; round <= g.vertices; ++round) {
    std::vector<std::vector<std::uint32_t>> signature(g.vertices);
    for (std::uint32_t v = 0; v < g.vertices; ++v) {
      auto& sig = signature[v];
      sig.push_back(color[v]);
      std::vector<std::uint32_t> neighbor_colors;
      for (auto [w, id] : adj[v]) neighbor_colors.push_back(color[w]);
      std::sort(neighbor_colors.begin(), neighbor_colors.end());
      sig.insert(sig.end(), neighbor_colors.begin(), neighbor_colors.end());
    }
    std::map<std::vector<std::uint32_t>, std::uint32_t> rank;
    for (const auto& sig : signature) rank.emplace(sig, 0);
    std::uint32_t next = 0;
    for (auto& [sig, id] : rank) id = next++;
    for (std::uint32_t v = 0; v < g.vertices; ++v) color[v] = rank[signature[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }

  std::vector<std::uint32_t> order(g.vertices);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&color](std::uint32_t a, std::uint32_t b) { return color[a] < color[b]; });
  std::vector<std::uint32_t> label(g.vertices);
  for (std::uint32_t i = 0; i < g.vertices; ++i) label[order[i]] = i;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> relabeled;
  relabeled.reserve(g.edges.size());
  for (auto [a, b] : g.edges) {
    auto la = label[a], lb = label[b];
    relabeled.emplace_back(std::min(la, lb), std::max(la, lb));
  }
  std::sort(relabeled.begin(), relabeled.end());
  std::vector<std::uint32_t> key;
  key.reserve(1 + 2 * relabeled.size());
  key.push_back(g.vertices);
  for (auto [a, b] : relabeled) {
    key.push_back(a);
    key.push_back(b);
  }
  return key;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& key) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : key) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

bool connected_without(const WorkGraph& g, std::uint32_t u, std::uint32_t v) {
  UnionFind sets(g.vertices);
  for (auto [a, b] : g.edges) {
    if ((a == u && b == v) || (a == v && b == u)) continue;
    sets.unite(a, b);
  }
  return sets.find(u) == sets.find(v);
}

class DeletionContraction {
 public:
  BiPoly solve(const WorkGraph& input) {
    WorkGraph g = compact(input);
    if (g.edges.empty()) return BiPoly::constant(1);

    const auto bridges = find_bridges(g);
    const auto bridge_count = static_cast<std::uint32_t>(std::count(bridges.begin(), bridges.end(), true));
    if (bridge_count > 0) {
      g = compact(contract_edges(g, bridges));
      if (g.edges.empty()) return BiPoly::monomial(1, bridge_count, 0);
    }

    auto key = memo_key(g);
    if (auto hit = memo_.find(key); hit != memo_.end()) return hit->second.shifted(bridge_count, 0);

    BiPoly result = branch(g);
    memo_.emplace(std::move(key), result);
    return result.shifted(bridge_count, 0);
  }

 private:
  // g is bridge-free, loop-free and has no isolated vertices.
  BiPoly branch(const WorkGraph& g) {
    std::vector<std::uint32_t> degree(g.vertices, 0);
    for (auto [a, b] : g.edges) {
      ++degree[a];
      ++degree[b];
    }
    const auto u = static_cast<std::uint32_t>(std::max_element(degree.begin(), degree.end()) - degree.begin());
    std::uint32_t v = UINT32_MAX;
    for (auto [a, b] : g.edges) {
      std::uint32_t other = a == u ? b : (b == u ? a : UINT32_MAX);
      if (other == UINT32_MAX) continue;
      if (v == UINT32_MAX || degree[other] > degree[v] || (degree[other] == degree[v] && other < v)) {
        v = other;
      }
    }

    // The whole parallel class P between u and v is handled at once.
    std::vector<bool> in_class(g.edges.size(), false);
    std::uint32_t multiplicity = 0;
    WorkGraph deleted{g.vertices, {}};
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      auto [a, b] = g.edges[i];
      if ((a == u && b == v) || (a == v && b == u)) {
        in_class[i] = true;
        ++multiplicity;
      } else {
        deleted.edges.push_back(g.edges[i]);
      }
    }
    const BiPoly contracted = solve(contract_edges(g, in_class));

    if (!connected_without(g, u, v)) {
      // P separates u from v: T = (x + y + ... + y^(m-1)) T(G/P).
      return mul(geometric_y(multiplicity, BiPoly::x()) - BiPoly::constant(1), contracted);
    }
    // T = T(G-P) + (1 + y + ... + y^(m-1)) T(G/P).
    return add(solve(deleted), mul(geometric_y(multiplicity, {}), contracted));
  }

  std::unordered_map<std::vector<std::uint32_t>, BiPoly, KeyHash> memo_;
};

// ---------------------------------------------------------------------------
// Subgraph expansion

// counts[(same * (V+1) + corank) * (E+1) + nullity]
struct ExpansionTable {
  std::uint32_t vertices = 0;
  std::uint32_t edges = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t& at(bool same, std::uint32_t corank, std::uint32_t nullity) {
    return counts[((same ? 1u : 0u) * (vertices + 1) + corank) * (edges + 1) + nullity];
  }
};

ExpansionTable expand(const Multigraph& g) {
  const std::uint32_t vertices = g.vertex_count();
  const auto edge_total = static_cast<std::uint32_t>(g.edge_count());
  const std::uint32_t graph_rank = vertices - static_cast<std::uint32_t>(component_count(g));
  const std::uint64_t subsets = std::uint64_t{1} << edge_total;
  const std::size_t table_size = 2 * std::size_t{vertices + 1} * (edge_total + 1);

  std::mutex partials_mutex;
  std::vector<std::pair<std::size_t, ExpansionTable>> indexed;
  parallel_chunks(subsets, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    ExpansionTable local{vertices, edge_total, std::vector<std::uint64_t>(table_size, 0)};
    UnionFind sets(std::max<std::uint32_t>(vertices, 1));
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      sets.reset();
      std::uint32_t rank = 0;
      for (std::uint32_t i = 0; i < edge_total; ++i) {
        if ((mask >> i) & 1u) {
          if (sets.unite(g.edges()[i].a, g.edges()[i].b)) ++rank;
        }
      }
      const auto size = static_cast<std::uint32_t>(std::popcount(mask));
      const bool same = vertices < 2 || sets.find(g.special_x()) == sets.find(g.special_y());
      ++local.at(same, graph_rank - rank, size - rank);
    }
    std::lock_guard lock(partials_mutex);
    indexed.emplace_back(chunk, std::move(local));
  });

  // Integer counts are merged exactly, so the order of the chunks is irrelevant.
  ExpansionTable total{vertices, edge_total, std::vector<std::uint64_t>(table_size, 0)};
  for (const auto& [chunk, table] : indexed) {
    for (std::size_t i = 0; i < table_size; ++i) total.counts[i] += table.counts[i];
  }
  return total;
}

BiPoly table_polynomial(ExpansionTable& table, bool same) {
  std::vector<BiPoly> x_powers{BiPoly::constant(1)};
  std::vector<BiPoly> y_powers{BiPoly::constant(1)};
  const BiPoly x_minus_1 = BiPoly::x() - BiPoly::constant(1);
  const BiPoly y_minus_1 = BiPoly::y() - BiPoly::constant(1);
  for (std::uint32_t i = 1; i <= table.vertices; ++i) x_powers.push_back(mul(x_powers.back(), x_minus_1));
  for (std::uint32_t j = 1; j <= table.edges; ++j) y_powers.push_back(mul(y_powers.back(), y_minus_1));

  BiPoly result;
  for (std::uint32_t a = 0; a <= table.vertices; ++a) {
    for (std::uint32_t b = 0; b <= table.edges; ++b) {
      std::uint64_t count = table.at(same, a, b);
      if (count == 0) continue;
      BigInt c;
      mpz_import(c.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
      result = add(result, scale(mul(x_powers[a], y_powers[b]), c));
    }
  }
  return result;
}

}  // namespace

SubgraphStats subgraph_stats(const Multigraph& g, std::uint64_t mask) {
  UnionFind sets(std::max<std::uint32_t>(g.vertex_count(), 1));
  std::uint32_t rank = 0, size = 0;
  for (std::size_t i = 0; i < g.edge_count() && i < 64; ++i) {
    if ((mask >> i) & 1u) {
      ++size;
      if (sets.unite(g.edges()[i].a, g.edges()[i].b)) ++rank;
    }
  }
  return SubgraphStats{rank, size - rank, g.vertex_count() - rank};
}

BiPoly tutte_deletion_contraction(const Multigraph& g) {
  require_edges_at_most(g, kDeletionContractionEdgeCap, "deletion-contraction");
  WorkGraph work{g.vertex_count(), {}};
  std::uint32_t loops = 0;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      ++loops;
    } else {
      work.edges.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    }
  }
  DeletionContraction solver;
  return solver.solve(work).shifted(0, loops);
}

BiPoly tutte_subgraph_expansion(const Multigraph& g) {
  auto split = split_tutte(g);
  return add(split.connected, split.separated);
}

SplitTutte split_tutte(const Multigraph& g) {
  require_edges_at_most(g, kExpansionEdgeCap, "subgraph expansion");
  auto table = expand(g);
  return SplitTutte{table_polynomial(table, true), table_polynomial(table, false)};
}

BigInt count_spanning_trees_bruteforce(const Multigraph& g) {
  require_edges_at_most(g, kExpansionEdgeCap, "spanning-tree enumeration");
  const std::uint32_t vertices = g.vertex_count();
  if (vertices <= 1) return 1;
  const std::uint32_t edge_total = static_cast<std::uint32_t>(g.edge_count());
  const std::uint32_t need = vertices - 1;
  if (need > edge_total) return 0;

  std::uint64_t trees = 0;
  UnionFind sets(vertices);
  const std::uint64_t limit = std::uint64_t{1} << edge_total;
  // Gosper's hack walks the subsets with exactly `need` bits.
  for (std::uint64_t mask = (std::uint64_t{1} << need) - 1; mask < limit;) {
    sets.reset();
    bool forest = true;
    for (std::uint32_t i = 0; i < edge_total && forest; ++i) {
      if ((mask >> i) & 1u) forest = sets.unite(g.edges()[i].a, g.edges()[i].b);
    }
    if (forest) ++trees;
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  BigInt result;
  mpz_import(result.get_mpz_t(), 1, 1, sizeof(trees), 0, 0, &trees);
  return result;
}

}  // namespace fractal_tutte
