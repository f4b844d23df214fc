#pragma once

#include <set>
#include <vector>

#include "cmgraph/cliques.hpp"
#include "cmgraph/graph.hpp"

namespace cmgraph {

/// Maximal independent sets of g (= maximal cliques of the complement), sorted.
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  return maximal_cliques(complement(g));
}

/// alpha(G)
inline int independence_number(const Graph& g) { return clique_number(complement(g)); }

/// Distinct sizes of the maximal independent sets, ascending.
inline std::vector<int> maximal_independent_set_sizes(const Graph& g) {
  std::set<int> sizes;
  for (VertexSet s : maximal_independent_sets(g)) sizes.insert(s.size());
  return {sizes.begin(), sizes.end()};
}

/// Well-covered: every maximal independent set (hence every minimal vertex cover) has one size.
inline bool is_unmixed(const Graph& g) { return maximal_independent_set_sizes(g).size() <= 1; }

/// Minimal vertex covers, obtained as complements of maximal independent sets.
inline std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
  std::vector<VertexSet> out;
  for (VertexSet s : maximal_independent_sets(g)) out.push_back(g.vertices() - s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cmgraph
