#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "cmgraph/graph.hpp"

namespace cmgraph {

namespace detail {

// Bron-Kerbosch with Tomita pivoting over bitmask adjacency.
inline void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                          const std::function<void(VertexSet)>& emit) {
  if (p.empty()) {
    if (x.empty()) emit(r);
    return;
  }
  Vertex pivot = 0;
  int best = -1;
  for (Vertex u : p | x) {
    const int score = (p & g.neighbors(u)).size();
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (Vertex v : p - g.neighbors(pivot)) {
    const VertexSet nv = g.neighbors(v);
    bron_kerbosch(g, r | VertexSet::singleton(v), p & nv, x & nv, emit);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace detail

/// All inclusion-maximal cliques, sorted lexicographically.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  detail::bron_kerbosch(g, {}, g.vertices(), {}, [&](VertexSet c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

/// All cliques with exactly r vertices, sorted lexicographically.
inline std::vector<VertexSet> cliques_of_size(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("clique size must be >= 1");
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet)> grow = [&](VertexSet current, VertexSet candidates) {
    if (current.size() == r) {
      out.push_back(current);
      return;
    }
    for (Vertex v : candidates) {
      candidates.erase(v);
      if (current.size() + 1 + candidates.size() < r) break;
      grow(current | VertexSet::singleton(v), candidates & g.neighbors(v));
    }
  };
  grow({}, g.vertices());
  std::sort(out.begin(), out.end());
  return out;
}

/// Clique number (0 for the graph on no vertices).
inline int clique_number(const Graph& g) {
  int best = 0;
  std::function<void(int, VertexSet)> search = [&](int size, VertexSet candidates) {
    if (candidates.empty()) {
      best = std::max(best, size);
      return;
    }
    for (Vertex v : candidates) {
      if (size + candidates.size() <= best) return;
      candidates.erase(v);
      search(size + 1, candidates & g.neighbors(v));
    }
  };
  search(0, g.vertices());
  return best;
}

namespace detail {

// Assigns colors 0..k-1 to vertices in order, opening at most one new color
// per step. `visit` returns true to stop the search.
inline bool color_search(const Graph& g, int k, std::vector<int>& color, Vertex v, int used,
                         const std::function<bool(const std::vector<int>&, int)>& visit) {
  if (v > g.order()) return visit(color, used);
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool clash = false;
    for (Vertex u : g.neighbors(v)) {
      if (u < v && color[static_cast<std::size_t>(u)] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[static_cast<std::size_t>(v)] = c;
    if (color_search(g, k, color, v + 1, std::max(used, c + 1), visit)) return true;
  }
  color[static_cast<std::size_t>(v)] = -1;
  return false;
}

inline int greedy_color_count(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()) + 1, -1);
  int used = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    std::uint64_t taken = 0;
    for (Vertex u : g.neighbors(v)) {
      if (color[static_cast<std::size_t>(u)] >= 0) taken |= std::uint64_t{1} << color[static_cast<std::size_t>(u)];
    }
    const int c = std::countr_one(taken);
    color[static_cast<std::size_t>(v)] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace detail

/// True iff g admits a proper coloring with at most k colors.
inline bool is_k_colorable(const Graph& g, int k) {
  if (g.order() == 0) return true;
  if (k <= 0) return false;
  std::vector<int> color(static_cast<std::size_t>(g.order()) + 1, -1);
  return detail::color_search(g, k, color, 1, 0,
                              [](const std::vector<int>&, int) { return true; });
}

/**
 * Exact chromatic number. The clique number bounds from below and a greedy
 * coloring from above; the exact search only runs for the values between.
 */
inline int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  const int lower = clique_number(g);
  const int upper = detail::greedy_color_count(g);
  for (int k = lower; k < upper; ++k) {
    if (is_k_colorable(g, k)) return k;
  }
  return upper;
}

/// An ordered list of disjoint blocks covering 1..n.
struct Partition {
  std::vector<VertexSet> blocks;
  friend bool operator==(const Partition&, const Partition&) = default;
};

namespace detail {

inline Partition blocks_from_coloring(const Graph& g, const std::vector<int>& color, int k) {
  Partition p{std::vector<VertexSet>(static_cast<std::size_t>(k))};
  for (Vertex v = 1; v <= g.order(); ++v) {
    p.blocks[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].insert(v);
  }
  return p;
}

}  // namespace detail

/**
 * Every partition of the vertices into exactly r nonempty independent
 * blocks, each listed once. Blocks are ordered by their smallest vertex.
 * Stops after `limit` partitions when limit > 0.
 */
inline std::vector<Partition> r_partitions(const Graph& g, int r, std::size_t limit = 0) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  std::vector<Partition> out;
  if (g.order() < r) return out;
  std::vector<int> color(static_cast<std::size_t>(g.order()) + 1, -1);
  detail::color_search(g, r, color, 1, 0, [&](const std::vector<int>& c, int used) {
    if (used != r) return false;
    out.push_back(detail::blocks_from_coloring(g, c, r));
    return limit > 0 && out.size() >= limit;
  });
  return out;
}

/// Some partition into exactly r nonempty independent blocks, if any.
inline std::optional<Partition> r_partition(const Graph& g, int r) {
  auto all = r_partitions(g, r, 1);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace cmgraph
