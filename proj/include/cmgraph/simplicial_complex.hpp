#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cmgraph/graph.hpp"
#include "cmgraph/independence.hpp"

namespace cmgraph {

/**
 * Finite simplicial complex stored by its facets.
 *
 * Vertices carry labels from 1..n. Complexes built from a graph use every
 * label; links keep the labels of the parent complex, so their vertex set
 * (the union of the facets) may be a proper subset of 1..n.
 *
 * The complex {empty face} is represented by the single facet {} and has
 * dimension -1.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() : facets_{VertexSet{}} {}

  /// Builds the complex generated by `facets`; every label 1..n must occur.
  static SimplicialComplex from_facets(int n, std::vector<VertexSet> facets) {
    SimplicialComplex c = generated_by(n, std::move(facets));
    if (c.vertices() != VertexSet::range(n)) {
      throw std::invalid_argument("every vertex 1.." + std::to_string(n) + " must lie in a facet");
    }
    return c;
  }

  /// Complex generated by arbitrary faces: keeps the inclusion-maximal ones.
  static SimplicialComplex generated_by(int n, std::vector<VertexSet> faces) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex bound out of range");
    const VertexSet universe = VertexSet::range(n);
    for (VertexSet f : faces) {
      if (!f.is_subset_of(universe)) {
        throw std::invalid_argument("face " + f.to_string() + " uses a label outside 1.." +
                                    std::to_string(n));
      }
    }
    std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
    std::vector<VertexSet> maximal;
    for (VertexSet f : faces) {
      const bool covered = std::any_of(maximal.begin(), maximal.end(),
                                       [f](VertexSet m) { return f.is_subset_of(m); });
      if (!covered) maximal.push_back(f);
    }
    if (maximal.empty()) maximal.push_back({});
    std::sort(maximal.begin(), maximal.end());
    SimplicialComplex c;
    c.n_ = n;
    c.facets_ = std::move(maximal);
    return c;
  }

  int label_bound() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  VertexSet vertices() const {
    VertexSet all;
    for (VertexSet f : facets_) all |= f;
    return all;
  }

  int dimension() const {
    int d = -1;
    for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
    return d;
  }

  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](VertexSet f) { return f.size() == facets_.front().size(); });
  }

  bool is_face(VertexSet s) const {
    return std::any_of(facets_.begin(), facets_.end(), [s](VertexSet f) { return s.is_subset_of(f); });
  }

  /// Every face including the empty one, ordered by size then lexicographically.
  std::vector<VertexSet> faces() const {
    std::unordered_set<std::uint64_t> seen;
    for (VertexSet f : facets_) {
      // Walk all submasks of the facet.
      const std::uint64_t full = f.bits();
      std::uint64_t sub = full;
      while (true) {
        seen.insert(sub);
        if (sub == 0) break;
        sub = (sub - 1) & full;
      }
    }
    std::vector<VertexSet> out;
    out.reserve(seen.size());
    for (std::uint64_t bits : seen) out.push_back(VertexSet::from_bits(bits));
    std::sort(out.begin(), out.end(), BySizeThenLex{});
    return out;
  }

  /// Faces with exactly d + 1 vertices, lexicographically ordered.
  std::vector<VertexSet> faces_of_dimension(int d) const {
    std::vector<VertexSet> out;
    for (VertexSet f : faces()) {
      if (f.size() == d + 1) out.push_back(f);
    }
    return out;
  }

  /// f_{-1}, f_0, ..., f_dim.
  std::vector<long long> f_vector() const {
    std::vector<long long> counts(static_cast<std::size_t>(dimension() + 2), 0);
    for (VertexSet f : faces()) ++counts[static_cast<std::size_t>(f.size())];
    return counts;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> facets_;
};

/// Faces are the independent sets of g; its Stanley-Reisner ideal is the edge ideal of g.
inline SimplicialComplex independence_complex(const Graph& g) {
  if (g.order() == 0) return {};
  return SimplicialComplex::from_facets(g.order(), maximal_independent_sets(g));
}

/// Faces are the cliques of g.
inline SimplicialComplex clique_complex(const Graph& g) {
  if (g.order() == 0) return {};
  return SimplicialComplex::from_facets(g.order(), maximal_cliques(g));
}

/// lk(F) = { G : G and F disjoint, G u F a face }, keeping parent labels.
inline SimplicialComplex link(const SimplicialComplex& c, VertexSet face) {
  if (!c.is_face(face)) throw std::invalid_argument(face.to_string() + " is not a face");
  std::vector<VertexSet> residuals;
  for (VertexSet f : c.facets()) {
    if (face.is_subset_of(f)) residuals.push_back(f - face);
  }
  return SimplicialComplex::generated_by(c.label_bound(), std::move(residuals));
}

/// Minimal non-faces over the complex's vertex set, lexicographically sorted.
inline std::vector<VertexSet> stanley_reisner_generators(const SimplicialComplex& c) {
  std::unordered_set<std::uint64_t> found;
  const VertexSet ground = c.vertices();
  for (VertexSet f : c.faces()) {
    for (Vertex v : ground - f) {
      const VertexSet s = f | VertexSet::singleton(v);
      if (found.count(s.bits()) != 0 || c.is_face(s)) continue;
      bool minimal = true;
      for (Vertex u : s) {
        if (!c.is_face(s - VertexSet::singleton(u))) {
          minimal = false;
          break;
        }
      }
      if (minimal) found.insert(s.bits());
    }
  }
  std::vector<VertexSet> out;
  for (std::uint64_t bits : found) out.push_back(VertexSet::from_bits(bits));
  std::sort(out.begin(), out.end());
  return out;
}

// --- text format -------------------------------------------------------------

/// "n k" followed by k facet lines "v1 v2 ... vt".
inline std::string format_complex(const SimplicialComplex& c) {
  std::ostringstream out;
  const bool void_face = c.facets().size() == 1 && c.facets().front().empty();
  out << c.label_bound() << ' ' << (void_face ? 0 : c.facets().size()) << '\n';
  if (void_face) return out.str();
  for (VertexSet f : c.facets()) {
    bool first = true;
    for (Vertex v : f) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

/// Inverse of format_complex; zero facet lines denote the complex {empty face}.
inline SimplicialComplex parse_complex(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header line \"n k\"");
  const auto header = detail::split_ws(lines[0].second);
  long long n = 0;
  long long k = 0;
  if (header.size() != 2 || !detail::parse_int(header[0], n) || !detail::parse_int(header[1], k) ||
      n < 0 || n > kMaxVertices || k < 0) {
    throw ParseError(lines[0].first, "expected \"n k\"");
  }
  if (static_cast<long long>(lines.size()) - 1 != k) {
    throw ParseError(lines.back().first, "header declares " + std::to_string(k) + " facets");
  }
  if (k == 0) return {};
  std::vector<VertexSet> facets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    VertexSet f;
    for (auto tok : detail::split_ws(lines[i].second)) {
      long long v = 0;
      if (!detail::parse_int(tok, v) || v < 1 || v > n) {
        throw ParseError(lines[i].first, "bad vertex \"" + std::string(tok) + "\"");
      }
      f.insert(static_cast<Vertex>(v));
    }
    facets.push_back(f);
  }
  try {
    return SimplicialComplex::from_facets(static_cast<int>(n), std::move(facets));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines[0].first, e.what());
  }
}

}  // namespace cmgraph
