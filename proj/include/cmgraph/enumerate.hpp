#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "cmgraph/canonical.hpp"
#include "cmgraph/cliques.hpp"
#include "cmgraph/cover_matching.hpp"
#include "cmgraph/independence.hpp"
#include "cmgraph/perfect.hpp"

namespace cmgraph {

/// Upper bound on the order of enumerated graphs.
inline constexpr int kEnumerationBound = 10;

/// Predicates an enumerated graph must satisfy. Unset members impose nothing.
struct EnsembleFilter {
  bool connected = false;
  std::optional<int> r_partite;             // partition into exactly r nonempty independent parts
  std::optional<int> maximal_clique_size;   // every maximal clique has this size
  bool class_g = false;                     // covered by alpha(G) cliques
  bool unmixed = false;
  bool perfect = false;

  /// Predicates inherited by induced subgraphs, usable to prune generation.
  bool admits_prefix(const Graph& g) const {
    if (r_partite && !is_k_colorable(g, *r_partite)) return false;
    if (maximal_clique_size && clique_number(g) > *maximal_clique_size) return false;
    return true;
  }

  bool accepts(const Graph& g) const {
    if (!admits_prefix(g)) return false;
    if (connected && !is_connected(g)) return false;
    if (r_partite && !r_partition(g, *r_partite)) return false;
    if (maximal_clique_size) {
      for (VertexSet c : maximal_cliques(g)) {
        if (c.size() != *maximal_clique_size) return false;
      }
    }
    if (unmixed && !is_unmixed(g)) return false;
    if (perfect && !is_perfect(g)) return false;
    if (class_g && !class_g_membership(g)) return false;
    return true;
  }
};

struct EnsembleMember {
  std::string canon;
  Graph graph;  // canonical representative
};

struct GraphEnsemble {
  int n_max = 0;
  EnsembleFilter filter;
  std::vector<EnsembleMember> members;  // by order, then canonical key
};

/**
 * Isomorphism classes of graphs level by level: every graph on k + 1 vertices
 * arises from one on k vertices by adding a vertex with some neighbourhood.
 * Levels keep only graphs passing the filter's hereditary predicates and are
 * deduplicated by canonical form.
 */
class GraphEnumerator {
 public:
  explicit GraphEnumerator(EnsembleFilter filter) : filter_(std::move(filter)) {
    levels_.push_back({Graph(0)});
  }

  /// Canonical representatives on exactly n vertices that pass the hereditary predicates.
  const std::vector<Graph>& level(int n) {
    if (n < 0 || n > kEnumerationBound) {
      throw std::invalid_argument("enumeration supports 0.." + std::to_string(kEnumerationBound) +
                                  " vertices, got " + std::to_string(n));
    }
    while (static_cast<int>(levels_.size()) <= n) grow();
    return levels_[static_cast<std::size_t>(n)];
  }

  /// Members of the ensemble on exactly n vertices.
  std::vector<EnsembleMember> members(int n) {
    std::vector<EnsembleMember> out;
    for (const Graph& g : level(n)) {
      if (filter_.accepts(g)) out.push_back({to_graph6(g), g});
    }
    return out;
  }

 private:
  void grow() {
    const int k = static_cast<int>(levels_.size()) - 1;
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> next;
    for (const Graph& base : levels_.back()) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Graph g(k + 1);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (Vertex u : VertexSet::from_bits(mask)) g.add_edge(u, k + 1);
        if (!filter_.admits_prefix(g)) continue;
        std::string key = canonical_form(g);
        if (seen.insert(key).second) next.emplace_back(std::move(key), Graph());
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> level;
    level.reserve(next.size());
    for (auto& [key, unused] : next) level.push_back(from_graph6(key));
    levels_.push_back(std::move(level));
  }

  EnsembleFilter filter_;
  std::vector<std::vector<Graph>> levels_;
};

/// All isomorphism classes on exactly n vertices passing `filter`, sorted by canonical key.
inline std::vector<Graph> enumerate_graphs(int n, const EnsembleFilter& filter = {}) {
  GraphEnumerator e(filter);
  std::vector<Graph> out;
  for (auto& m : e.members(n)) out.push_back(std::move(m.graph));
  return out;
}

/// Ensemble over orders n_min..n_max.
inline GraphEnsemble enumerate_ensemble(int n_max, const EnsembleFilter& filter, int n_min = 1) {
  GraphEnumerator e(filter);
  GraphEnsemble out{n_max, filter, {}};
  for (int n = n_min; n <= n_max; ++n) {
    auto level = e.members(n);
    out.members.insert(out.members.end(), std::make_move_iterator(level.begin()),
                       std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace cmgraph
