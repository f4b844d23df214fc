#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cmgraph/graph.hpp"

namespace cmgraph {

/// Largest order accepted by canonical_form; the enumeration harness stays within it.
inline constexpr int kCanonicalBound = 10;

// --- graph6 ----------------------------------------------------------------

/// graph6 encoding (orders up to 62). Bits run x(0,1), x(0,2), x(1,2), x(0,3), ...
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i + 1, j + 1) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  if (text.empty() || text[0] < 63 || text[0] > 63 + 62) {
    throw std::invalid_argument("bad graph6 header");
  }
  const int n = text[0] - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
  if (text.size() != 1 + (bits + 5) / 6) throw std::invalid_argument("bad graph6 length");
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if (byte < 0 || byte > 63) throw std::invalid_argument("bad graph6 byte");
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i + 1, j + 1);
    }
  }
  return g;
}

// --- canonical labeling ------------------------------------------------------

namespace detail {

// Colour refinement seeded by degree. Colours are ranks of sorted signatures,
// so the resulting ordered partition is an isomorphism invariant.
inline std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v + 1);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (Vertex u : g.neighbors(v + 1)) around.push_back(color[static_cast<std::size_t>(u - 1)]);
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

struct CanonicalSearch {
  const Graph& g;
  int n;
  std::vector<int> cell_of_position;  // refined colour owning each position
  std::vector<std::vector<Vertex>> cells;
  std::vector<Vertex> current;
  std::vector<Vertex> best;
  std::uint64_t best_bits = 0;
  int total_bits = 0;
  bool have_best = false;
  VertexSet used;

  void run(int position, std::uint64_t bits, int length) {
    if (position == n) {
      if (!have_best || bits < best_bits) {
        best = current;
        best_bits = bits;
        have_best = true;
      }
      return;
    }
    VertexSet tried;
    for (Vertex v : cells[static_cast<std::size_t>(cell_of_position[static_cast<std::size_t>(position)])]) {
      if (used.contains(v)) continue;
      // Swapping two unplaced twins is an automorphism fixing the prefix,
      // so only one twin per class needs exploring.
      bool twin_seen = false;
      for (Vertex w : tried) {
        if ((g.neighbors(v) - VertexSet::singleton(w)) == (g.neighbors(w) - VertexSet::singleton(v))) {
          twin_seen = true;
          break;
        }
      }
      if (twin_seen) continue;
      tried.insert(v);
      std::uint64_t next = bits;
      for (int i = 0; i < position; ++i) {
        next = (next << 1) | (g.has_edge(current[static_cast<std::size_t>(i)], v) ? 1U : 0U);
      }
      const int next_length = length + position;
      // best may have changed in an earlier sibling, so compare afresh.
      if (have_best && next_length > 0 && next > (best_bits >> (total_bits - next_length))) continue;
      current.push_back(v);
      used.insert(v);
      run(position + 1, next, next_length);
      used.erase(v);
      current.pop_back();
    }
  }
};

}  // namespace detail

struct CanonicalLabeling {
  std::string key;                 // graph6 of the canonical relabeling
  std::vector<Vertex> at_position;  // at_position[i] = vertex receiving label i + 1
};

/**
 * Canonical labeling by exhaustive minimisation of the graph6 bit string
 * over all vertex orders that respect the colour-refined ordered partition,
 * with branch-and-bound on the bit prefix.
 */
inline CanonicalLabeling canonical_labeling(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalBound) {
    throw std::invalid_argument("canonical_form supports at most " + std::to_string(kCanonicalBound) +
                                " vertices, got " + std::to_string(n));
  }
  const std::vector<int> color = detail::refine_colors(g);
  const int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  detail::CanonicalSearch search{g, n, {}, std::vector<std::vector<Vertex>>(static_cast<std::size_t>(classes)),
                                 {}, {}, 0, n * (n - 1) / 2, false, {}};
  for (int v = 0; v < n; ++v) search.cells[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v + 1);
  for (int c = 0; c < classes; ++c) {
    for (std::size_t k = 0; k < search.cells[static_cast<std::size_t>(c)].size(); ++k) search.cell_of_position.push_back(c);
  }
  search.run(0, 0, 0);

  Graph relabeled(n);
  std::vector<Vertex> position_of(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) position_of[static_cast<std::size_t>(search.best[static_cast<std::size_t>(i)])] = i + 1;
  for (auto [u, v] : g.edges()) {
    relabeled.add_edge(position_of[static_cast<std::size_t>(u)], position_of[static_cast<std::size_t>(v)]);
  }
  return {to_graph6(relabeled), search.best};
}

/// Equal strings iff the graphs are isomorphic (orders up to kCanonicalBound).
inline std::string canonical_form(const Graph& g) { return canonical_labeling(g).key; }

/// The canonical representative of g's isomorphism class.
inline Graph canonical_graph(const Graph& g) { return from_graph6(canonical_form(g)); }

}  // namespace cmgraph
