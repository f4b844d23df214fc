#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cmgraph/cliques.hpp"
#include "cmgraph/homology.hpp"
#include "cmgraph/simplicial_complex.hpp"

namespace cmgraph {

/// A face whose link has nonzero reduced homology in a degree below its dimension.
struct CMWitness {
  VertexSet face;
  int index = 0;
  friend bool operator==(const CMWitness&, const CMWitness&) = default;
};

struct CMReport {
  FieldSpec field;
  bool is_cm = true;
  std::optional<CMWitness> witness;  // present iff !is_cm
  bool pure = true;                  // false: rejected on facet sizes alone
};

namespace detail {

// b_0 of a 1-dimensional complex: components of its 1-skeleton minus one.
inline long long reduced_b0(const SimplicialComplex& c) {
  const VertexSet verts = c.vertices();
  if (verts.empty()) return 0;
  int components = 0;
  VertexSet unseen = verts;
  while (!unseen.empty()) {
    ++components;
    VertexSet frontier = VertexSet::singleton(unseen.min());
    unseen -= frontier;
    while (!frontier.empty()) {
      VertexSet next;
      for (VertexSet f : c.facets()) {
        if (f.intersects(frontier)) next |= f;
      }
      frontier = next & unseen;
      unseen -= frontier;
    }
  }
  return components - 1;
}

// Smallest i < dim(link) with nonzero reduced Betti number of lk(face).
inline std::optional<int> first_nonvanishing(const SimplicialComplex& c, VertexSet face, FieldSpec field) {
  const SimplicialComplex lk = link(c, face);
  const int dim = lk.dimension();
  if (dim <= 0) return std::nullopt;
  if (dim == 1) {
    if (reduced_b0(lk) != 0) return 0;
    return std::nullopt;
  }
  const BettiVector betti = reduced_betti(lk, field);
  for (int i = -1; i < dim; ++i) {
    if (betti[static_cast<std::size_t>(i + 1)] != 0) return i;
  }
  return std::nullopt;
}

}  // namespace detail

/**
 * Reisner's criterion: c is Cohen-Macaulay over `field` iff for every face F
 * (the empty face included) the link of F has vanishing reduced homology in
 * all degrees below its dimension.
 *
 * Faces are visited by size, then lexicographically; the first failing face
 * and degree form the witness. Links of dimension 0 impose nothing and links
 * of dimension 1 only need to be connected.
 */
inline CMReport reisner_cm(const SimplicialComplex& c, FieldSpec field) {
  CMReport report;
  report.field = field;
  report.pure = c.is_pure();
  for (VertexSet face : c.faces()) {
    if (auto index = detail::first_nonvanishing(c, face, field)) {
      report.is_cm = false;
      report.witness = CMWitness{face, *index};
      return report;
    }
  }
  if (!report.pure) throw std::logic_error("non-pure complex passed every link test");
  return report;
}

/// Verdict only; rejects non-pure complexes without searching for a witness.
inline bool is_cohen_macaulay(const SimplicialComplex& c, FieldSpec field) {
  if (!c.is_pure()) return false;
  for (VertexSet face : c.faces()) {
    if (detail::first_nonvanishing(c, face, field)) return false;
  }
  return true;
}

/// Cohen-Macaulayness of the edge ring K[x]/I(G), via the independence complex.
inline CMReport cm_graph(const Graph& g, FieldSpec field) {
  return reisner_cm(independence_complex(g), field);
}

inline bool is_cm_graph(const Graph& g, FieldSpec field) {
  return is_cohen_macaulay(independence_complex(g), field);
}

inline std::vector<CMReport> cm_characteristic_profile(const Graph& g, const std::vector<FieldSpec>& fields) {
  if (fields.empty()) throw std::invalid_argument("at least one field is required");
  const SimplicialComplex c = independence_complex(g);
  std::vector<CMReport> out;
  for (FieldSpec f : fields) out.push_back(reisner_cm(c, f));
  return out;
}

/// Characteristics used when claiming independence of the field.
inline std::vector<FieldSpec> default_fields() {
  return {FieldSpec::characteristic(0), FieldSpec::characteristic(2), FieldSpec::characteristic(3)};
}

// --- Herzog-Hibi criterion for bipartite graphs --------------------------------

/// Pairs (v_i, w_i) listed in the order i = 1..n.
struct HHOrdering {
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

/**
 * Checks the three ordering conditions verbatim: v_i ~ w_i; v_i ~ w_j implies
 * i <= j; and v_i ~ w_j, v_j ~ w_k with i < j < k imply v_i ~ w_k. Also
 * requires the v's and w's to be independent sets that together list every
 * vertex once.
 */
inline bool satisfies_hh_conditions(const Graph& g, const HHOrdering& h) {
  VertexSet vs;
  VertexSet ws;
  for (auto [v, w] : h.pairs) {
    if (vs.contains(v) || ws.contains(w) || v == w) return false;
    vs.insert(v);
    ws.insert(w);
  }
  if (vs.intersects(ws) || (vs | ws) != g.vertices()) return false;
  if (!g.is_independent(vs) || !g.is_independent(ws)) return false;
  const std::size_t n = h.pairs.size();
  auto adj = [&](std::size_t i, std::size_t j) { return g.has_edge(h.pairs[i].first, h.pairs[j].second); };
  for (std::size_t i = 0; i < n; ++i) {
    if (!adj(i, i)) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (adj(i, j) && i > j) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (adj(i, j) && adj(j, k) && !adj(i, k)) return false;
      }
    }
  }
  return true;
}

namespace detail {

// Orders matched pairs so every cross edge v_a ~ w_b points forward; fails on
// a directed cycle. Kahn's algorithm taking the smallest ready pair.
inline std::optional<HHOrdering> order_matching(const Graph& g,
                                                const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  const std::size_t n = pairs.size();
  std::vector<int> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && g.has_edge(pairs[a].first, pairs[b].second)) ++indegree[b];
    }
  }
  std::vector<bool> done(n, false);
  HHOrdering out;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t next = n;
    for (std::size_t a = 0; a < n; ++a) {
      if (!done[a] && indegree[a] == 0) {
        next = a;
        break;
      }
    }
    if (next == n) return std::nullopt;
    done[next] = true;
    out.pairs.push_back(pairs[next]);
    for (std::size_t b = 0; b < n; ++b) {
      if (b != next && g.has_edge(pairs[next].first, pairs[b].second)) --indegree[b];
    }
  }
  return out;
}

}  // namespace detail

/**
 * Searches for an ordering meeting the Herzog-Hibi conditions. Perfect
 * matchings between the two parts are enumerated in canonical order; each is
 * oriented by its cross edges, topologically sorted and then checked.
 * Returns nullopt when the parts differ in size or no matching works.
 */
inline std::optional<HHOrdering> hh_bipartite_cm(const Graph& g) {
  const auto parts = r_partition(g, 2);
  if (!parts) throw std::invalid_argument("graph is not bipartite with two nonempty parts");
  const VertexSet left = parts->blocks[0];
  const VertexSet right = parts->blocks[1];
  if (left.size() != right.size()) return std::nullopt;

  const std::vector<Vertex> lefts = left.members();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::optional<HHOrdering> found;
  VertexSet taken;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == lefts.size()) {
      auto ordering = detail::order_matching(g, pairs);
      if (ordering && satisfies_hh_conditions(g, *ordering)) {
        found = std::move(ordering);
        return true;
      }
      return false;
    }
    const Vertex v = lefts[i];
    for (Vertex w : g.neighbors(v) - taken) {
      pairs.emplace_back(v, w);
      taken.insert(w);
      if (self(self, i + 1)) return true;
      taken.erase(w);
      pairs.pop_back();
    }
    return false;
  };
  search(search, 0);
  return found;
}

}  // namespace cmgraph
