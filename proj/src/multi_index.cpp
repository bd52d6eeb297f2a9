#include "cylflow/multi_index.hpp"

#include <algorithm>

namespace cylflow {

namespace {

void enumerate_rec(int k, int coord, int remaining, std::vector<int>& cur,
                   std::vector<MultiIndex>& out) {
  if (coord == k) {
    out.emplace_back(cur);
    return;
  }
  for (int d = 0; d <= remaining; ++d) {
    cur[coord] = d;
    enumerate_rec(k, coord + 1, remaining - d, cur, out);
  }
  cur[coord] = 0;
}

}  // namespace

std::vector<MultiIndex> enumerate_modes(int k, int cap) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(k, 0);
  for (int total = 0; total <= cap; ++total) {
    std::vector<MultiIndex> level;
    enumerate_rec(k, 0, total, cur, level);
    std::erase_if(level,
                  [total](const MultiIndex& m) { return m.total_degree() != total; });
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

MultiIndex quadratic_index(int k, int i) {
  std::vector<int> d(k, 0);
  d[i] = 2;
  return MultiIndex(std::move(d));
}

MultiIndex quadratic_index(int k, int i, int j) {
  std::vector<int> d(k, 0);
  if (i == j) {
    d[i] = 2;
  } else {
    d[i] = 1;
    d[j] = 1;
  }
  return MultiIndex(std::move(d));
}

MultiIndex linear_index(int k, int i) {
  std::vector<int> d(k, 0);
  d[i] = 1;
  return MultiIndex(std::move(d));
}

MultiIndex quartic_index(int k, int i) {
  std::vector<int> d(k, 0);
  d[i] = 4;
  return MultiIndex(std::move(d));
}

}  // namespace cylflow
