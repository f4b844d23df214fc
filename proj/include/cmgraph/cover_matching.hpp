#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cmgraph/cliques.hpp"
#include "cmgraph/graph.hpp"
#include "cmgraph/independence.hpp"

namespace cmgraph {

/// Pairwise disjoint r-cliques.
struct RMatching {
  int r = 0;
  std::vector<VertexSet> cliques;
  bool perfect = false;  // the cliques cover every vertex
  friend bool operator==(const RMatching&, const RMatching&) = default;
};

/// Cliques whose union is the vertex set; overlaps allowed.
struct CliqueCover {
  std::vector<VertexSet> cliques;
};

/// Re-checks disjointness, clique-ness, sizes and the perfect flag.
inline bool is_valid_r_matching(const Graph& g, const RMatching& m) {
  VertexSet covered;
  for (VertexSet c : m.cliques) {
    if (c.size() != m.r || !g.is_clique(c) || c.intersects(covered) || !c.is_subset_of(g.vertices())) {
      return false;
    }
    covered |= c;
  }
  return m.perfect == (covered == g.vertices());
}

/**
 * Perfect r-matchings by exact-cover backtracking over the r-cliques: the
 * lowest-labeled uncovered vertex is always covered next. Results come out
 * in lexicographic order of their clique lists. Stops after `limit` results
 * when limit > 0.
 */
inline std::vector<RMatching> perfect_r_matchings(const Graph& g, int r, std::size_t limit = 0) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  std::vector<RMatching> out;
  if (g.order() % r != 0) return out;
  const std::vector<VertexSet> cliques = cliques_of_size(g, r);
  std::vector<std::vector<VertexSet>> through(static_cast<std::size_t>(g.order()) + 1);
  for (VertexSet c : cliques) {
    for (Vertex v : c) through[static_cast<std::size_t>(v)].push_back(c);
  }
  std::vector<VertexSet> chosen;
  auto search = [&](auto&& self, VertexSet uncovered) -> bool {
    if (uncovered.empty()) {
      out.push_back({r, chosen, true});
      return limit > 0 && out.size() >= limit;
    }
    const Vertex v = uncovered.min();
    for (VertexSet c : through[static_cast<std::size_t>(v)]) {
      if (!c.is_subset_of(uncovered)) continue;
      chosen.push_back(c);
      if (self(self, uncovered - c)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (g.order() > 0) search(search, g.vertices());
  return out;
}

inline bool has_unique_perfect_r_matching(const Graph& g, int r) {
  return perfect_r_matchings(g, r, 2).size() == 1;
}

/// Disjoint cover produced from a clique cover by removing already covered vertices.
struct BasicCliqueCover {
  std::vector<VertexSet> cliques;
  bool dropped_empty = false;  // some residual was empty and was left out
};

/**
 * Q'_1 = Q_1 and Q'_i = Q_i minus (Q_1 u ... u Q_{i-1}), in the given order.
 * Empty residuals are dropped and flagged.
 */
inline BasicCliqueCover basic_clique_cover(const Graph& g, const CliqueCover& cover) {
  VertexSet covered;
  for (VertexSet c : cover.cliques) {
    if (!c.is_subset_of(g.vertices()) || !g.is_clique(c)) {
      throw std::invalid_argument(c.to_string() + " is not a clique of the graph");
    }
    covered |= c;
  }
  if (covered != g.vertices()) throw std::invalid_argument("cliques do not cover every vertex");

  BasicCliqueCover out;
  VertexSet seen;
  for (VertexSet c : cover.cliques) {
    const VertexSet residual = c - seen;
    seen |= c;
    if (residual.empty()) {
      out.dropped_empty = true;
      continue;
    }
    out.cliques.push_back(residual);
  }
  return out;
}

/**
 * Membership in the class of graphs covered by alpha(G) cliques. Searches
 * covers by maximal cliques, always branching on the lowest uncovered vertex,
 * and prunes when the remaining slots cannot hold the uncovered vertices.
 */
inline std::optional<CliqueCover> class_g_membership(const Graph& g) {
  if (g.order() == 0) return CliqueCover{};
  const int alpha = independence_number(g);
  const std::vector<VertexSet> maximal = maximal_cliques(g);
  int omega = 0;
  for (VertexSet c : maximal) omega = std::max(omega, c.size());
  std::vector<std::vector<VertexSet>> through(static_cast<std::size_t>(g.order()) + 1);
  for (VertexSet c : maximal) {
    for (Vertex v : c) through[static_cast<std::size_t>(v)].push_back(c);
  }
  CliqueCover cover;
  auto search = [&](auto&& self, VertexSet uncovered, int slots) -> bool {
    if (uncovered.empty()) return true;
    if (slots == 0 || uncovered.size() > slots * omega) return false;
    const Vertex v = uncovered.min();
    for (VertexSet c : through[static_cast<std::size_t>(v)]) {
      cover.cliques.push_back(c);
      if (self(self, uncovered - c, slots - 1)) return true;
      cover.cliques.pop_back();
    }
    return false;
  };
  if (!search(search, g.vertices(), alpha)) return std::nullopt;
  // A cover needs at least alpha cliques, so the search found exactly alpha.
  return cover;
}

/// Vertices whose degree is exactly r - 1.
inline std::vector<Vertex> degree_r_minus_1_vertices(const Graph& g, int r) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == r - 1) out.push_back(v);
  }
  return out;
}

/// Size of a maximum matching between `left` and `right` (Kuhn's augmenting paths).
inline int bipartite_matching_size(const Graph& g, VertexSet left, VertexSet right) {
  std::vector<Vertex> partner(static_cast<std::size_t>(g.order()) + 1, 0);
  int size = 0;
  for (Vertex u : left) {
    VertexSet visited;
    auto augment = [&](auto&& self, Vertex x) -> bool {
      for (Vertex w : g.neighbors(x) & right) {
        if (visited.contains(w)) continue;
        visited.insert(w);
        const Vertex mate = partner[static_cast<std::size_t>(w)];
        if (mate == 0 || self(self, mate)) {
          partner[static_cast<std::size_t>(w)] = x;
          return true;
        }
      }
      return false;
    };
    if (augment(augment, u)) ++size;
  }
  return size;
}

/// Throws unless the blocks are disjoint, independent and cover the vertices.
inline void validate_partition(const Graph& g, const Partition& parts) {
  VertexSet seen;
  for (VertexSet b : parts.blocks) {
    if (b.intersects(seen)) throw std::invalid_argument("partition blocks overlap");
    if (!b.is_subset_of(g.vertices())) throw std::invalid_argument("block outside the vertex set");
    if (!g.is_independent(b)) throw std::invalid_argument("block " + b.to_string() + " is not independent");
    seen |= b;
  }
  if (seen != g.vertices()) throw std::invalid_argument("partition does not cover every vertex");
}

/// True iff every two parts have equal size and a perfect matching between them.
inline bool pairwise_part_matchings(const Graph& g, const Partition& parts) {
  validate_partition(g, parts);
  for (std::size_t i = 0; i < parts.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.blocks.size(); ++j) {
      const VertexSet a = parts.blocks[i];
      const VertexSet b = parts.blocks[j];
      if (a.size() != b.size()) return false;
      if (bipartite_matching_size(g, a, b) != a.size()) return false;
    }
  }
  return true;
}

}  // namespace cmgraph
