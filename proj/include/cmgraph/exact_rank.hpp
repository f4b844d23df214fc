#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmgraph {

/// Row-major dense integer matrix used as elimination input.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

namespace detail {

// Fraction-free elimination; returns nullopt when T overflows.
template <typename T, typename Mul>
std::optional<std::size_t> bareiss_rank(std::vector<T> m, std::size_t rows, std::size_t cols, Mul mul_sub) {
  auto at = [&](std::size_t i, std::size_t j) -> T& { return m[i * cols + j]; };
  T previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const T p = at(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T lead = at(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        // (a*p - lead*b) / previous is exact by Sylvester's identity.
        auto value = mul_sub(at(i, j), p, lead, at(rank, j));
        if (!value) return std::nullopt;
        at(i, j) = *value / previous;
      }
      at(i, col) = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

}  // namespace detail

/**
 * Exact rank over the rationals by fraction-free (Bareiss) elimination.
 * Runs in checked 64-bit arithmetic and restarts with arbitrary-precision
 * integers if any intermediate minor overflows.
 */
inline std::size_t rank_over_rationals(const IntMatrix& a) {
  auto checked = [](std::int64_t x, std::int64_t p, std::int64_t lead, std::int64_t y)
      -> std::optional<std::int64_t> {
    std::int64_t left = 0;
    std::int64_t right = 0;
    std::int64_t diff = 0;
    if (__builtin_mul_overflow(x, p, &left) || __builtin_mul_overflow(lead, y, &right) ||
        __builtin_sub_overflow(left, right, &diff)) {
      return std::nullopt;
    }
    return diff;
  };
  if (auto r = detail::bareiss_rank<std::int64_t>(a.data, a.rows, a.cols, checked)) return *r;

  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> big(a.data.begin(), a.data.end());
  auto exact = [](const cpp_int& x, const cpp_int& p, const cpp_int& lead, const cpp_int& y)
      -> std::optional<cpp_int> { return cpp_int(x * p - lead * y); };
  return *detail::bareiss_rank<cpp_int>(std::move(big), a.rows, a.cols, exact);
}

/// Exact rank over F_p, p prime below 2^31.
inline std::size_t rank_mod_prime(const IntMatrix& a, std::uint32_t p) {
  const std::uint64_t mod = p;
  std::vector<std::uint64_t> m(a.data.size());
  for (std::size_t k = 0; k < a.data.size(); ++k) {
    const std::int64_t r = a.data[k] % static_cast<std::int64_t>(mod);
    m[k] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(mod) : r);
  }
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return m[i * a.cols + j]; };
  auto inverse = [mod](std::uint64_t x) {
    std::uint64_t result = 1;
    std::uint64_t e = mod - 2;
    while (e > 0) {
      if (e & 1U) result = result * x % mod;
      x = x * x % mod;
      e >>= 1U;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols && rank < a.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows && at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < a.cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const std::uint64_t inv = inverse(at(rank, col));
    for (std::size_t j = col; j < a.cols; ++j) at(rank, j) = at(rank, j) * inv % mod;
    for (std::size_t i = rank + 1; i < a.rows; ++i) {
      const std::uint64_t factor = at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols; ++j) {
        at(i, j) = (at(i, j) + (mod - factor) * at(rank, j)) % mod;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace cmgraph
