#pragma once

#include <optional>
#include <vector>

#include "cmgraph/graph.hpp"

namespace cmgraph {

namespace detail {

// Grows induced paths from `start` through vertices larger than it; closes a
// hole when the next vertex sees exactly the path's two ends.
inline bool extend_induced_path(const Graph& g, Vertex start, std::vector<Vertex>& path,
                                VertexSet on_path) {
  const Vertex last = path.back();
  for (Vertex w : g.neighbors(last)) {
    if (w <= start || on_path.contains(w)) continue;
    const VertexSet seen = g.neighbors(w) & on_path;
    const VertexSet ends = VertexSet{last, start};
    if (path.size() >= 2 && seen == ends) {
      const std::size_t length = path.size() + 1;
      if (length >= 5 && length % 2 == 1) {
        path.push_back(w);
        return true;
      }
      continue;
    }
    if (seen != VertexSet::singleton(last)) continue;
    path.push_back(w);
    on_path.insert(w);
    if (extend_induced_path(g, start, path, on_path)) return true;
    on_path.erase(w);
    path.pop_back();
  }
  return false;
}

}  // namespace detail

/// Vertices of an induced odd cycle of length >= 5, in cycle order, if one exists.
inline std::optional<std::vector<Vertex>> find_odd_hole(const Graph& g) {
  for (Vertex s = 1; s <= g.order(); ++s) {
    std::vector<Vertex> path{s};
    if (detail::extend_induced_path(g, s, path, VertexSet::singleton(s))) return path;
  }
  return std::nullopt;
}

struct PerfectnessReport {
  bool perfect = true;
  bool obstruction_in_complement = false;  // true: odd antihole
  std::vector<Vertex> obstruction;         // cycle order, empty when perfect
};

/// Perfectness through the absence of odd holes and odd antiholes.
inline PerfectnessReport perfectness(const Graph& g) {
  if (auto hole = find_odd_hole(g)) return {false, false, *hole};
  if (auto antihole = find_odd_hole(complement(g))) return {false, true, *antihole};
  return {};
}

inline bool is_perfect(const Graph& g) { return perfectness(g).perfect; }

}  // namespace cmgraph
