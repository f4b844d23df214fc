#include <catch_amalgamated.hpp>

#include "cmgraph/exact_rank.hpp"
#include "cmgraph/fixtures.hpp"
#include "cmgraph/homology.hpp"
#include "named_graphs.hpp"
#include "oracles.hpp"

using namespace cmgraph;

namespace {

const FieldSpec Q = FieldSpec::characteristic(0);
const FieldSpec F2 = FieldSpec::characteristic(2);
const FieldSpec F3 = FieldSpec::characteristic(3);

SimplicialComplex rp2() {
  return SimplicialComplex::from_facets(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                            {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

SimplicialComplex simplex_boundary(int d) {
  // Boundary of the d-simplex on d + 1 vertices: a (d-1)-sphere.
  std::vector<VertexSet> facets;
  for (Vertex v = 1; v <= d + 1; ++v) facets.push_back(VertexSet::range(d + 1) - VertexSet::singleton(v));
  return SimplicialComplex::from_facets(d + 1, facets);
}

bool boundary_squares_to_zero(const SimplicialComplex& c) {
  const auto b = boundary_matrices(c);
  for (std::size_t d = 0; d + 1 < b.size(); ++d) {
    const IntMatrix& lo = b[d].entries;
    const IntMatrix& hi = b[d + 1].entries;
    if (lo.cols != hi.rows) return false;
    for (std::size_t i = 0; i < lo.rows; ++i)
      for (std::size_t j = 0; j < hi.cols; ++j) {
        long long s = 0;
        for (std::size_t k = 0; k < lo.cols; ++k) s += lo(i, k) * hi(k, j);
        if (s != 0) return false;
      }
  }
  return true;
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::characteristic(0).value() == 0);
  CHECK(FieldSpec::characteristic(2147483647).value() == 2147483647U);
  CHECK_THROWS_AS(FieldSpec::characteristic(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::characteristic(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::characteristic(-3), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::characteristic(2147483659LL), std::invalid_argument);
}

TEST_CASE("exact ranks") {
  CHECK(rank_over(IntMatrix(3, 4), Q) == 0);
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(1, 1) = 3;
  CHECK(rank_over(m, Q) == 2);
  CHECK(rank_over(m, F2) == 1);
  CHECK(rank_over(m, F3) == 1);

  SECTION("large entries fall back to big integers") {
    IntMatrix big(3, 3);
    const std::int64_t x = std::int64_t{1} << 40;
    big(0, 0) = x;
    big(0, 1) = x + 1;
    big(1, 0) = x - 1;
    big(1, 1) = x;
    big(2, 0) = 2 * x - 1;
    big(2, 1) = 2 * x + 1;  // row 0 + row 1
    big(0, 2) = 1;
    big(1, 2) = 1;
    big(2, 2) = 2;
    CHECK(rank_over_rationals(big) == 2);
    big(2, 2) = 3;
    CHECK(rank_over_rationals(big) == 3);
  }

  SECTION("random matrices against Smith normal form") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t r = 1 + trial % 7;
      const std::size_t c = 1 + (trial / 7) % 7;
      IntMatrix a(r, c);
      std::vector<std::vector<oracle::BigInt>> b(r, std::vector<oracle::BigInt>(c));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) b[i][j] = a(i, j) = (trial % 3 == 0 && j == 0) ? 0 : entry(rng);
      const auto factors = oracle::invariant_factors(b);
      for (unsigned p : {0U, 2U, 3U, 5U}) {
        std::size_t expect = 0;
        for (const auto& d : factors)
          if (p == 0 || d % p != 0) ++expect;
        CHECK(rank_over(a, FieldSpec::characteristic(p)) == expect);
      }
    }
  }
}

TEST_CASE("boundary matrices") {
  const auto edge = boundary_matrices(SimplicialComplex::from_facets(2, {{1, 2}}));
  REQUIRE(edge.size() == 2);
  CHECK(edge[0].rows() == 1);
  CHECK(edge[0].cols() == 2);
  CHECK(edge[0].entries.data == std::vector<std::int64_t>{1, 1});
  CHECK(edge[1].entries.data == std::vector<std::int64_t>{-1, 1});

  const auto tri = boundary_matrices(SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}, {1, 3}}));
  CHECK(rank_over(tri[1].entries, Q) == 2);
  CHECK(rank_over(tri[1].entries, F2) == 2);

  const auto fig = boundary_matrices(independence_complex(fixtures::fig1()));
  REQUIRE(fig.size() == 3);
  CHECK(fig[2].rows() == 30);
  CHECK(fig[2].cols() == 20);
  for (const auto& b : fig)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      int nonzero = 0;
      for (std::size_t i = 0; i < b.rows(); ++i) nonzero += b.entries(i, j) != 0;
      CHECK(nonzero == b.dimension + 1);
    }

  CHECK(boundary_squares_to_zero(independence_complex(fixtures::fig1())));
  CHECK(boundary_squares_to_zero(rp2()));
  for (int d = 1; d <= 5; ++d) CHECK(boundary_squares_to_zero(simplex_boundary(d)));
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial)
    CHECK(boundary_squares_to_zero(independence_complex(named::random_graph(rng, 2 + trial % 8, 0.3))));
}

TEST_CASE("reduced Betti numbers") {
  CHECK(reduced_betti(SimplicialComplex(), Q) == BettiVector{1});
  CHECK(reduced_betti(SimplicialComplex::from_facets(2, {{1}, {2}}), Q) == BettiVector{0, 1});
  CHECK(reduced_betti(SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}, {1, 3}}), F2) == BettiVector{0, 0, 1});

  for (int d = 1; d <= 5; ++d) {
    BettiVector sphere(static_cast<std::size_t>(d + 1), 0);
    sphere.back() = 1;
    for (FieldSpec f : {Q, F2, F3}) CHECK(reduced_betti(simplex_boundary(d), f) == sphere);
  }
  for (int n = 1; n <= 6; ++n) {
    const auto full = SimplicialComplex::from_facets(n, {VertexSet::range(n)});
    for (FieldSpec f : {Q, F2}) {
      for (long long b : reduced_betti(full, f)) CHECK(b == 0);
    }
  }

  SECTION("projective plane") {
    const auto c = rp2();
    CHECK(reduced_betti(c, Q) == BettiVector{0, 0, 0, 0});
    CHECK(reduced_betti(c, F2) == BettiVector{0, 0, 1, 1});
    CHECK(reduced_betti(c, F3) == BettiVector{0, 0, 0, 0});
    const auto b = boundary_matrices(c);
    CHECK(rank_over(b[2].entries, Q) == 10);
    CHECK(rank_over(b[2].entries, F2) == 9);
    CHECK(oracle::torsion_primes(c) == std::set<unsigned>{2});
  }

  SECTION("figure graph") {
    const auto c = independence_complex(fixtures::fig1());
    CHECK(reduced_betti(c, Q) == BettiVector{0, 0, 0, 0});
    CHECK(reduced_betti(c, F2) == BettiVector{0, 0, 1, 1});
    CHECK(reduced_betti(c, F3) == BettiVector{0, 0, 0, 0});
    CHECK(oracle::betti_via_snf(c, 0) == reduced_betti(c, Q));
    CHECK(oracle::betti_via_snf(c, 2) == reduced_betti(c, F2));
  }

  SECTION("Euler-Poincare and agreement with Smith normal form") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 80; ++trial) {
      const auto c = independence_complex(named::random_graph(rng, 1 + trial % 7, 0.3));
      const auto torsion = oracle::torsion_primes(c);
      for (unsigned p : {0U, 2U, 3U, 5U}) {
        const BettiVector b = reduced_betti(c, FieldSpec::characteristic(p));
        CHECK(b == oracle::betti_via_snf(c, p));
        long long alt = 0;
        for (std::size_t k = 0; k < b.size(); ++k) alt += (k % 2 == 1 ? 1 : -1) * b[k];
        CHECK(alt == reduced_euler_characteristic(c));
      }
      if (torsion.count(3) == 0) CHECK(reduced_betti(c, F3) == reduced_betti(c, Q));
    }
  }
}
