#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmgraph/vertex_set.hpp"

namespace cmgraph {

/// Thrown when an edge-list document does not follow the expected grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on vertices 1..n (n <= 64).
 *
 * Adjacency is kept symmetric and irreflexive by construction; the only
 * mutator is add_edge, which rejects loops.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(check_order(n)) {}
  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  VertexSet neighbors(Vertex v) const { return adj_.at(index(v)); }
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

  int edge_count() const {
    int twice = 0;
    for (VertexSet s : adj_) twice += s.size();
    return twice / 2;
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 1; u <= order(); ++u) {
      for (Vertex v : adj_[u - 1]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  /// Adds {u, v}; adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_.at(index(u)).insert(v);
    adj_.at(index(v)).insert(u);
  }

  bool is_independent(VertexSet s) const {
    for (Vertex v : s) {
      if (adj_[v - 1].intersects(s)) return false;
    }
    return true;
  }

  bool is_clique(VertexSet s) const {
    for (Vertex v : s) {
      if (!(s - VertexSet::singleton(v)).is_subset_of(adj_[v - 1])) return false;
    }
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                  std::to_string(kMaxVertices));
    }
    return n;
  }
  std::size_t index(Vertex v) const {
    if (v < 1 || v > order()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                              std::to_string(order()));
    }
    return static_cast<std::size_t>(v - 1);
  }

  std::vector<VertexSet> adj_;
};

/// Subgraph together with the map from new labels to old labels.
struct RelabeledGraph {
  Graph graph;
  std::vector<Vertex> old_label;  // old_label[new - 1]
};

/// Induced subgraph on `keep`, relabeled 1..|keep| in increasing order.
inline RelabeledGraph induced_subgraph(const Graph& g, VertexSet keep) {
  RelabeledGraph out{Graph(keep.size()), keep.members()};
  std::vector<Vertex> new_label(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < out.old_label.size(); ++i) {
    new_label[static_cast<std::size_t>(out.old_label[i])] = static_cast<Vertex>(i + 1);
  }
  for (auto [u, v] : g.edges()) {
    if (keep.contains(u) && keep.contains(v)) {
      out.graph.add_edge(new_label[static_cast<std::size_t>(u)],
                         new_label[static_cast<std::size_t>(v)]);
    }
  }
  return out;
}

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

/// G minus the closed neighborhood {v} u N(v), relabeled.
inline RelabeledGraph delete_closed_neighborhood(const Graph& g, Vertex v) {
  const VertexSet closed = g.neighbors(v) | VertexSet::singleton(v);
  return induced_subgraph(g, g.vertices() - closed);
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen = VertexSet::singleton(1);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= next;
  }
  return seen == g.vertices();
}

// --- edge-list text format -------------------------------------------------

namespace detail {

inline bool parse_int(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (tok[0] == '-' || tok[0] == '+') {
    neg = tok[0] == '-';
    i = 1;
    if (tok.size() == 1) return false;
  }
  long long value = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return false;
    value = value * 10 + (tok[i] - '0');
    if (value > 1'000'000'000) return false;
  }
  out = neg ? -value : value;
  return true;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

/// Non-blank, non-comment lines with their 1-based line numbers.
inline std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++number;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') out.emplace_back(number, line);
    pos = nl + 1;
  }
  return out;
}

}  // namespace detail

/**
 * Parses the edge-list document: a header line "n m" followed by exactly m
 * lines "u v". Lines starting with '#' and blank lines are skipped. Endpoints
 * may be given in either order; loops, duplicates and out-of-range labels
 * are rejected.
 */
inline Graph parse_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header line \"n m\"");

  auto read_pair = [](int number, std::string_view line, const char* what) {
    const auto toks = detail::split_ws(line);
    long long a = 0;
    long long b = 0;
    if (toks.size() != 2 || !detail::parse_int(toks[0], a) || !detail::parse_int(toks[1], b)) {
      throw ParseError(number, std::string("expected ") + what + ", got \"" +
                                   std::string(line) + "\"");
    }
    return std::pair{a, b};
  };

  const auto [n, m] = read_pair(lines[0].first, lines[0].second, "\"n m\"");
  if (n < 0 || n > kMaxVertices) {
    throw ParseError(lines[0].first, "vertex count " + std::to_string(n) + " outside 0.." +
                                         std::to_string(kMaxVertices));
  }
  if (m < 0) throw ParseError(lines[0].first, "negative edge count");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError(lines.back().first, "header declares " + std::to_string(m) +
                                             " edges but document has " +
                                             std::to_string(lines.size() - 1));
  }

  Graph g(static_cast<int>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [number, line] = lines[i];
    const auto [u, v] = read_pair(number, line, "\"u v\"");
    for (long long w : {u, v}) {
      if (w < 1 || w > n) {
        throw ParseError(number, "vertex " + std::to_string(w) + " outside 1.." +
                                     std::to_string(n));
      }
    }
    if (u == v) throw ParseError(number, "loop at vertex " + std::to_string(u));
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError(number, "duplicate edge " + std::to_string(std::min(u, v)) + " " +
                                   std::to_string(std::max(u, v)));
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

/// Writes g in the edge-list format, edges sorted with u < v.
inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace cmgraph
