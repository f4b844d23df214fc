#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "cmgraph/simplicial_complex.hpp"

namespace cmgraph {

/**
 * Checks a facet order against the exchange form of the shelling condition:
 * for every i >= 2 and every j < i there are l in F_i \ F_j and k < i with
 * F_i \ F_k = {l}.
 */
inline bool is_shelling_order(const std::vector<VertexSet>& order) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      bool found = false;
      for (Vertex l : order[i] - order[j]) {
        for (std::size_t k = 0; k < i && !found; ++k) {
          found = (order[i] - order[k]) == VertexSet::singleton(l);
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

enum class ShellStatus { shellable, not_shellable, budget_exhausted };

struct ShellingResult {
  ShellStatus status = ShellStatus::not_shellable;
  std::vector<VertexSet> order;  // witness when shellable
  std::uint64_t steps = 0;       // prefix extensions performed
};

inline constexpr std::uint64_t kDefaultShellingBudget = 100'000'000;

namespace detail {

class ShellingSearch {
 public:
  ShellingSearch(std::vector<VertexSet> facets, std::uint64_t budget)
      : facets_(std::move(facets)), budget_(budget), words_((facets_.size() + 63) / 64) {}

  ShellingResult run() {
    ShellingResult result;
    std::vector<std::uint64_t> placed(words_, 0);
    std::vector<std::size_t> order;
    const bool found = extend(placed, order);
    result.steps = steps_;
    if (found) {
      result.status = ShellStatus::shellable;
      for (std::size_t i : order) result.order.push_back(facets_[i]);
    } else {
      result.status = exhausted_ ? ShellStatus::budget_exhausted : ShellStatus::not_shellable;
    }
    return result;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (std::uint64_t w : key) h = (h ^ w) * 0x100000001b3ULL;
      return h;
    }
  };

  static bool test(const std::vector<std::uint64_t>& set, std::size_t i) {
    return (set[i / 64] >> (i % 64)) & 1U;
  }

  // The intersection of `candidate` with the complex of the placed facets must
  // be generated by faces of size |candidate| - 1.
  bool attaches(std::size_t candidate, const std::vector<std::size_t>& order) const {
    const VertexSet f = facets_[candidate];
    const int ridge = f.size() - 1;
    std::vector<VertexSet> ridges;
    for (std::size_t g : order) {
      const VertexSet meet = f & facets_[g];
      if (meet.size() == ridge) ridges.push_back(meet);
    }
    if (ridges.empty()) return false;
    for (std::size_t g : order) {
      const VertexSet meet = f & facets_[g];
      if (meet.size() == ridge) continue;
      const bool inside = std::any_of(ridges.begin(), ridges.end(),
                                      [meet](VertexSet r) { return meet.is_subset_of(r); });
      if (!inside) return false;
    }
    return true;
  }

  bool extend(std::vector<std::uint64_t>& placed, std::vector<std::size_t>& order) {
    if (order.size() == facets_.size()) return true;
    if (dead_.count(placed) != 0) return false;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (test(placed, i)) continue;
      if (!order.empty() && !attaches(i, order)) continue;
      if (steps_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++steps_;
      placed[i / 64] |= std::uint64_t{1} << (i % 64);
      order.push_back(i);
      if (extend(placed, order)) return true;
      order.pop_back();
      placed[i / 64] &= ~(std::uint64_t{1} << (i % 64));
      if (exhausted_) return false;
    }
    dead_.insert(placed);
    return false;
  }

  std::vector<VertexSet> facets_;
  std::uint64_t budget_;
  std::size_t words_;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> dead_;
};

}  // namespace detail

/**
 * Decides shellability of a pure complex by backtracking over facet orders.
 *
 * Facets are tried in order of descending number of codimension-one
 * neighbours. Whether a facet may be appended depends only on the set of
 * facets already placed, so prefixes whose set has been refuted are not
 * explored again. `budget` bounds the number of prefix extensions.
 */
inline ShellingResult is_shellable(const SimplicialComplex& c,
                                   std::uint64_t budget = kDefaultShellingBudget) {
  if (!c.is_pure()) throw std::invalid_argument("shellability is only decided for pure complexes");
  const std::vector<VertexSet>& all = c.facets();
  const int ridge = all.front().size() - 1;
  std::vector<std::pair<long, VertexSet>> keyed;
  for (VertexSet f : all) {
    const long neighbours =
        std::count_if(all.begin(), all.end(), [&](VertexSet g) { return g != f && (f & g).size() == ridge; });
    keyed.emplace_back(-neighbours, f);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<VertexSet> facets;
  for (const auto& [key, f] : keyed) facets.push_back(f);
  ShellingResult result = detail::ShellingSearch(std::move(facets), budget).run();
  if (result.status == ShellStatus::shellable && !is_shelling_order(result.order)) {
    throw std::logic_error("shelling search produced an order that fails verification");
  }
  return result;
}

inline const char* to_string(ShellStatus s) {
  switch (s) {
    case ShellStatus::shellable:
      return "shellable";
    case ShellStatus::not_shellable:
      return "not_shellable";
    case ShellStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

}  // namespace cmgraph
