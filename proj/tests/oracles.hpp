#pragma once

// Slow reference implementations used only by the tests. None of them call
// into the library's search or elimination code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmgraph/graph.hpp"
#include "cmgraph/simplicial_complex.hpp"

namespace oracle {

using cmgraph::Graph;
using cmgraph::SimplicialComplex;
using cmgraph::Vertex;
using cmgraph::VertexSet;

inline std::vector<VertexSet> all_subsets(int n) {
  std::vector<VertexSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(VertexSet::from_bits(m));
  return out;
}

inline bool independent(const Graph& g, VertexSet s) {
  for (Vertex u : s)
    for (Vertex v : s)
      if (u < v && g.has_edge(u, v)) return false;
  return true;
}

inline bool clique(const Graph& g, VertexSet s) {
  for (Vertex u : s)
    for (Vertex v : s)
      if (u < v && !g.has_edge(u, v)) return false;
  return true;
}

inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (VertexSet s : all_subsets(g.order())) {
    if (!independent(g, s)) continue;
    bool maximal = true;
    for (Vertex v = 1; v <= g.order() && maximal; ++v) {
      if (!s.contains(v) && independent(g, s | VertexSet::singleton(v))) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
  auto covers = [&](VertexSet s) {
    for (auto [u, v] : g.edges())
      if (!s.contains(u) && !s.contains(v)) return false;
    return true;
  };
  std::vector<VertexSet> out;
  for (VertexSet s : all_subsets(g.order())) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (Vertex v : s) {
      if (covers(s - VertexSet::singleton(v))) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int clique_number(const Graph& g) {
  int best = 0;
  for (VertexSet s : all_subsets(g.order()))
    if (clique(g, s)) best = std::max(best, s.size());
  return best;
}

inline int independence_number(const Graph& g) {
  int best = 0;
  for (VertexSet s : all_subsets(g.order()))
    if (independent(g, s)) best = std::max(best, s.size());
  return best;
}

// Plain backtracking over all colour assignments, no symmetry breaking.
inline bool colorable(const Graph& g, int k, std::vector<int>& color, Vertex v) {
  if (v > g.order()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (Vertex u = 1; u < v; ++u)
      if (g.has_edge(u, v) && color[u] == c) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, k, color, v + 1)) return true;
  }
  return false;
}

inline int chromatic_number(const Graph& g) {
  for (int k = 0;; ++k) {
    std::vector<int> color(g.order() + 1, -1);
    if (colorable(g, k, color, 1)) return k;
  }
}

/// omega(H) == chi(H) for every induced subgraph H.
inline bool perfect_by_definition(const Graph& g) {
  for (VertexSet s : all_subsets(g.order())) {
    const Graph h = cmgraph::induced_subgraph(g, s).graph;
    if (oracle::clique_number(h) != oracle::chromatic_number(h)) return false;
  }
  return true;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), 1);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) {
      if (!b.has_edge(p[u - 1], p[v - 1])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Faces as every subset of some facet, found by testing all subsets of the vertex range.
inline std::set<std::uint64_t> faces(const SimplicialComplex& c) {
  std::set<std::uint64_t> out;
  for (VertexSet s : all_subsets(c.label_bound())) {
    for (VertexSet f : c.facets())
      if (s.is_subset_of(f)) {
        out.insert(s.bits());
        break;
      }
  }
  return out;
}

/// Number of perfect r-matchings by trying every set of n/r pairwise disjoint r-cliques.
inline std::size_t count_perfect_r_matchings(const Graph& g, int r) {
  if (g.order() % r != 0) return 0;
  std::vector<VertexSet> cl;
  for (VertexSet s : all_subsets(g.order()))
    if (s.size() == r && clique(g, s)) cl.push_back(s);
  const int need = g.order() / r;
  std::size_t count = 0;
  std::vector<int> pick(cl.size(), 0);
  std::fill(pick.end() - std::min<std::size_t>(need, pick.size()), pick.end(), 1);
  if (static_cast<int>(cl.size()) < need) return 0;
  do {
    VertexSet u;
    bool disjoint = true;
    for (std::size_t i = 0; i < cl.size(); ++i) {
      if (!pick[i]) continue;
      if (u.intersects(cl[i])) disjoint = false;
      u |= cl[i];
    }
    if (disjoint && u == g.vertices()) ++count;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

// --- Smith normal form over the integers ---------------------------------------

using BigInt = boost::multiprecision::cpp_int;

/// Nonzero invariant factors (absolute values) of an integer matrix.
inline std::vector<BigInt> invariant_factors(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<BigInt> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const BigInt q = a[i][t] / a[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          clean = false;
          std::swap(a[t], a[i]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const BigInt q = a[t][j] / a[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          clean = false;
          for (auto& row : a) std::swap(row[t], row[j]);
        }
      }
      if (clean) {
        // Divisibility: the pivot must divide the rest of the block.
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
              clean = false;
            }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

/// Boundary matrix from k-vertex faces to (k-1)-vertex faces, built from a face set.
inline std::vector<std::vector<BigInt>> boundary(const std::set<std::uint64_t>& face_bits, int k) {
  std::vector<VertexSet> rows, cols;
  for (auto b : face_bits) {
    VertexSet f = VertexSet::from_bits(b);
    if (f.size() == k - 1) rows.push_back(f);
    if (f.size() == k) cols.push_back(f);
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  std::vector<std::vector<BigInt>> m(rows.size(), std::vector<BigInt>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto verts = cols[j].members();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const VertexSet g = cols[j] - VertexSet::singleton(verts[i]);
      const auto it = std::lower_bound(rows.begin(), rows.end(), g);
      m[static_cast<std::size_t>(it - rows.begin())][j] = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

/// Reduced Betti numbers (index 0 is degree -1) from Smith normal forms; p = 0 means Q.
inline std::vector<long long> betti_via_snf(const SimplicialComplex& c, unsigned p) {
  const auto fs = faces(c);
  int top = 0;
  for (auto b : fs) top = std::max(top, VertexSet::from_bits(b).size());
  std::vector<long long> count(top + 2, 0);
  for (auto b : fs) ++count[VertexSet::from_bits(b).size()];
  std::vector<long long> rank(top + 2, 0);  // rank of boundary out of k-vertex faces
  for (int k = 1; k <= top; ++k) {
    for (const BigInt& d : invariant_factors(boundary(fs, k)))
      if (p == 0 || d % p != 0) ++rank[k];
  }
  std::vector<long long> betti(top + 1, 0);
  for (int k = 0; k <= top; ++k) betti[k] = count[k] - rank[k] - rank[k + 1];
  return betti;
}

/// Torsion primes appearing in any boundary map's invariant factors.
inline std::set<unsigned> torsion_primes(const SimplicialComplex& c) {
  const auto fs = faces(c);
  int top = 0;
  for (auto b : fs) top = std::max(top, VertexSet::from_bits(b).size());
  std::set<unsigned> primes;
  for (int k = 1; k <= top; ++k) {
    for (BigInt d : invariant_factors(boundary(fs, k))) {
      for (unsigned q = 2; d > 1; ++q) {
        while (d % q == 0) {
          primes.insert(q);
          d /= q;
        }
      }
    }
  }
  return primes;
}

/// Every graph on n labeled vertices (n <= 6).
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((m >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
    out.push_back(g);
  }
  return out;
}

}  // namespace oracle
