#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cylflow {

/// Hermite mode label on R^k: one polynomial degree per coordinate.
struct MultiIndex {
  std::vector<int> degrees;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> d) : degrees(std::move(d)) {
    for (int deg : degrees)
      if (deg < 0) throw std::invalid_argument("MultiIndex: negative degree");
  }

  int dim() const { return static_cast<int>(degrees.size()); }

  int total_degree() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0);
  }

  auto operator<=>(const MultiIndex&) const = default;
};

/// All multi-indices on R^k with total degree <= cap, in graded
/// lexicographic order (stable across runs).
std::vector<MultiIndex> enumerate_modes(int k, int cap);

/// The index with degree 2 in coordinate i, zero elsewhere.
MultiIndex quadratic_index(int k, int i);

/// The index with degree 1 in coordinates i and j (i != j), or 2 if i == j.
MultiIndex quadratic_index(int k, int i, int j);

/// The index with degree 1 in coordinate i.
MultiIndex linear_index(int k, int i);

/// The degree-4 pure index in coordinate i.
MultiIndex quartic_index(int k, int i);

}  // namespace cylflow
