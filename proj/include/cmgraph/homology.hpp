#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmgraph/exact_rank.hpp"
#include "cmgraph/simplicial_complex.hpp"

namespace cmgraph {

/// Coefficient field: characteristic 0 (the rationals) or a prime p < 2^31.
class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static FieldSpec characteristic(long long c) {
    if (c == 0) return FieldSpec{};
    if (c < 2 || c > 2147483647LL || !is_prime(c)) {
      throw std::invalid_argument("field characteristic must be 0 or a prime below 2^31, got " +
                                  std::to_string(c));
    }
    FieldSpec f;
    f.characteristic_ = static_cast<std::uint32_t>(c);
    return f;
  }
  static FieldSpec rationals() { return {}; }

  std::uint32_t value() const { return characteristic_; }
  friend bool operator==(FieldSpec, FieldSpec) = default;

  static bool is_prime(long long c) {
    if (c < 2) return false;
    for (long long d = 2; d * d <= c; ++d) {
      if (c % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint32_t characteristic_ = 0;
};

/// Rank over the field; characteristic 0 uses exact fraction-free elimination.
inline std::size_t rank_over(const IntMatrix& m, FieldSpec field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return field.value() == 0 ? rank_over_rationals(m) : rank_mod_prime(m, field.value());
}

/**
 * Boundary map from d-faces (columns) to (d-1)-faces (rows), both in
 * lexicographic order. Dimension 0 maps vertices onto the empty face.
 */
struct BoundaryMatrix {
  int dimension = 0;
  std::vector<VertexSet> row_faces;
  std::vector<VertexSet> col_faces;
  IntMatrix entries;

  std::size_t rows() const { return row_faces.size(); }
  std::size_t cols() const { return col_faces.size(); }
};

/// Entry of the oriented boundary: removing the i-th smallest vertex carries sign (-1)^i.
inline int incidence_sign(VertexSet face, Vertex removed) {
  const int below = (face & VertexSet::from_bits((std::uint64_t{1} << (removed - 1)) - 1)).size();
  return below % 2 == 0 ? 1 : -1;
}

/// Augmented chain complex of c: boundary matrices for d = 0, ..., dim.
inline std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c) {
  const std::vector<VertexSet> all = c.faces();
  const int dim = c.dimension();
  std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(dim + 2));
  for (VertexSet f : all) by_size[static_cast<std::size_t>(f.size())].push_back(f);

  std::vector<BoundaryMatrix> out;
  for (int d = 0; d <= dim; ++d) {
    BoundaryMatrix b;
    b.dimension = d;
    b.row_faces = by_size[static_cast<std::size_t>(d)];
    b.col_faces = by_size[static_cast<std::size_t>(d + 1)];
    b.entries = IntMatrix(b.rows(), b.cols());
    std::map<std::uint64_t, std::size_t> row_index;
    for (std::size_t i = 0; i < b.rows(); ++i) row_index[b.row_faces[i].bits()] = i;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const VertexSet face = b.col_faces[j];
      for (Vertex v : face) {
        b.entries(row_index.at((face - VertexSet::singleton(v)).bits()), j) = incidence_sign(face, v);
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

/// Reduced Betti numbers b_{-1}, ..., b_dim; element 0 holds index -1.
using BettiVector = std::vector<long long>;

inline BettiVector reduced_betti(const SimplicialComplex& c, FieldSpec field) {
  const auto f = c.f_vector();
  const auto boundaries = boundary_matrices(c);
  // rank[d] = rank of the boundary out of d-faces; d = -1 maps to zero.
  std::vector<long long> rank(f.size() + 1, 0);
  for (const auto& b : boundaries) {
    rank[static_cast<std::size_t>(b.dimension + 1)] = static_cast<long long>(rank_over(b.entries, field));
  }
  BettiVector betti(f.size(), 0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    // k indexes dimension k - 1.
    const long long kernel = f[k] - rank[k];
    const long long image = rank[k + 1];
    betti[k] = kernel - image;
  }
  return betti;
}

/// -1 + f_0 - f_1 + ... : the reduced Euler characteristic from face counts.
inline long long reduced_euler_characteristic(const SimplicialComplex& c) {
  long long chi = 0;
  const auto f = c.f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 1 ? 1 : -1) * f[k];
  return chi;
}

}  // namespace cmgraph
