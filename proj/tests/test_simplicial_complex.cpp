#include <catch_amalgamated.hpp>

#include "cmgraph/fixtures.hpp"
#include "cmgraph/independence.hpp"
#include "cmgraph/shelling.hpp"
#include "cmgraph/simplicial_complex.hpp"
#include "named_graphs.hpp"
#include "oracles.hpp"

using namespace cmgraph;

namespace {

SimplicialComplex triangle_boundary() { return SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}, {1, 3}}); }

}  // namespace

TEST_CASE("construction keeps maximal faces only") {
  const auto c = SimplicialComplex::from_facets(3, {{1, 2}, {1}, {2, 3}, {1, 2}});
  CHECK(c.facets() == std::vector<VertexSet>{{1, 2}, {2, 3}});
  CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{1, 2}}), std::invalid_argument);  // 3 missing
  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{1, 3}}), std::invalid_argument);
  const SimplicialComplex empty;
  CHECK(empty.dimension() == -1);
  CHECK(empty.f_vector() == std::vector<long long>{1});
}

TEST_CASE("independence complex") {
  CHECK(independence_complex(named::complete(3)).facets() == std::vector<VertexSet>{{1}, {2}, {3}});
  CHECK(independence_complex(Graph(3)).facets() == std::vector<VertexSet>{{1, 2, 3}});
  CHECK(independence_complex(Graph(0)).dimension() == -1);
  CHECK(clique_complex(named::complete(3)).facets() == std::vector<VertexSet>{{1, 2, 3}});

  const auto c = independence_complex(fixtures::fig1());
  CHECK(c.is_pure());
  CHECK(c.dimension() == 2);
  CHECK(c.f_vector() == std::vector<long long>{1, 11, 30, 20});

  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = named::random_graph(rng, 1 + trial % 9, 0.45);
    const auto ic = independence_complex(g);
    CHECK(ic.facets() == maximal_independent_sets(g));
    CHECK(ic.is_pure() == is_unmixed(g));
    CHECK(stanley_reisner_generators(ic).size() == static_cast<std::size_t>(g.edge_count()));
  }
}

TEST_CASE("dimension, purity and f-vector") {
  const auto mixed = SimplicialComplex::from_facets(3, {{1, 3}, {2}});
  CHECK(mixed.dimension() == 1);
  CHECK_FALSE(mixed.is_pure());
  CHECK(triangle_boundary().f_vector() == std::vector<long long>{1, 3, 3});
  CHECK(triangle_boundary().is_pure());

  std::mt19937 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const auto c = independence_complex(named::random_graph(rng, 1 + trial % 8, 0.35));
    const auto brute = oracle::faces(c);
    const auto listed = c.faces();
    CHECK(listed.size() == brute.size());
    for (VertexSet f : listed) CHECK(brute.count(f.bits()) == 1);
    CHECK(std::is_sorted(listed.begin(), listed.end(), BySizeThenLex{}));
    long long total = 0;
    for (long long x : c.f_vector()) total += x;
    CHECK(total == static_cast<long long>(brute.size()));
  }
}

TEST_CASE("links") {
  const auto c = independence_complex(fixtures::fig1());
  CHECK(link(c, {}).facets() == c.facets());
  const auto simplex = SimplicialComplex::from_facets(3, {{1, 2, 3}});
  CHECK(link(simplex, {1}).facets() == std::vector<VertexSet>{{2, 3}});
  CHECK_THROWS_AS(link(triangle_boundary(), {1, 2, 3}), std::invalid_argument);

  SECTION("fig1 vertex links are cycles") {
    for (Vertex v = 1; v <= 11; ++v) {
      const auto lk = link(c, VertexSet::singleton(v));
      CHECK(lk.dimension() == 1);
      std::map<Vertex, int> degree;
      for (VertexSet e : lk.facets())
        for (Vertex u : e) ++degree[u];
      for (auto [u, d] : degree) CHECK(d == 2);
      CHECK(degree.size() == lk.facets().size());  // a cycle: as many vertices as edges
    }
  }
}

TEST_CASE("Stanley-Reisner generators") {
  const Graph p3 = named::path(3);
  CHECK(stanley_reisner_generators(independence_complex(p3)) == std::vector<VertexSet>{{1, 2}, {2, 3}});
  CHECK(stanley_reisner_generators(triangle_boundary()) == std::vector<VertexSet>{{1, 2, 3}});
  const Graph g = fixtures::fig1();
  std::vector<VertexSet> edges;
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  std::sort(edges.begin(), edges.end());
  CHECK(stanley_reisner_generators(independence_complex(g)) == edges);
}

TEST_CASE("complex text format") {
  const auto c = triangle_boundary();
  CHECK(format_complex(c) == "3 3\n1 2\n1 3\n2 3\n");
  CHECK(parse_complex(format_complex(c)).facets() == c.facets());
  CHECK(parse_complex("# comment\n2 1\n1 2\n").facets() == std::vector<VertexSet>{{1, 2}});
  CHECK(parse_complex("0 0\n").dimension() == -1);
  CHECK_THROWS_AS(parse_complex("3 1\n1 2\n"), ParseError);  // vertex 3 in no facet
  CHECK_THROWS_AS(parse_complex("3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("3 1\n1 4 2\n"), ParseError);
  CHECK_THROWS_AS(parse_complex(""), ParseError);
}

TEST_CASE("shelling orders") {
  SECTION("triangle boundary") {
    const auto r = is_shellable(triangle_boundary());
    REQUIRE(r.status == ShellStatus::shellable);
    CHECK(is_shelling_order(r.order));
    CHECK(is_shelling_order({{1, 2}, {2, 3}, {1, 3}}));
  }
  SECTION("two disjoint edges") {
    const auto c = SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}});
    CHECK(is_shellable(c).status == ShellStatus::not_shellable);
    CHECK_FALSE(is_shelling_order({{1, 2}, {3, 4}}));
  }
  SECTION("verifier") {
    // Two triangles glued at a vertex: the second meets the first in a point only.
    CHECK_FALSE(is_shelling_order({{1, 2, 3}, {3, 4, 5}}));
    CHECK(is_shelling_order({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}));
    CHECK_FALSE(is_shelling_order({{1, 2, 3}, {3, 4, 5}, {2, 3, 4}}));
  }
  SECTION("non-pure input is an error") {
    CHECK_THROWS_AS(is_shellable(SimplicialComplex::from_facets(3, {{1, 3}, {2}})), std::invalid_argument);
  }
  SECTION("budget") {
    const auto c = independence_complex(fixtures::fig1());
    const auto r = is_shellable(c, 5);
    CHECK(r.status == ShellStatus::budget_exhausted);
    CHECK(r.order.empty());
  }
  SECTION("agrees with exhaustive permutation search on small complexes") {
    std::mt19937 rng(23);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 60; ++trial) {
      const auto c = independence_complex(named::random_graph(rng, 4 + trial % 4, 0.4));
      if (!c.is_pure() || c.facets().size() > 7) continue;
      ++checked;
      std::vector<VertexSet> order = c.facets();
      std::sort(order.begin(), order.end());
      bool brute = false;
      do {
        if (is_shelling_order(order)) {
          brute = true;
          break;
        }
      } while (std::next_permutation(order.begin(), order.end()));
      const auto r = is_shellable(c);
      CHECK((r.status == ShellStatus::shellable) == brute);
      if (r.status == ShellStatus::shellable) CHECK(is_shelling_order(r.order));
    }
    CHECK(checked >= 20);
  }
}
