#pragma once

// Shorthand constructors for the spaces the tests use repeatedly.

#include <vector>

#include "topo/space.hpp"

namespace testutil {

inline std::vector<topo::PointSet> table_of(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<topo::PointSet> table;
  table.reserve(rows.size());
  for (const auto& row : rows) {
    topo::PointSet u(n);
    for (int x : row) u = u.with(x);
    table.push_back(u);
  }
  return table;
}

inline topo::Space make_space(const std::vector<std::vector<int>>& rows) {
  return topo::new_space(table_of(rows));
}

inline topo::Space discrete(int n) {
  std::vector<std::vector<int>> rows;
  for (int x = 0; x < n; ++x) rows.push_back({x});
  return make_space(rows);
}

inline topo::Space indiscrete(int n) {
  std::vector<int> all;
  for (int x = 0; x < n; ++x) all.push_back(x);
  return make_space(std::vector<std::vector<int>>(static_cast<std::size_t>(n), all));
}

// min_nbhd [{0}, {0,1}]: the open point is 0.
inline topo::Space sierpinski() { return make_space({{0}, {0, 1}}); }

// The alpha-scattered-but-not-scattered separation witness:
// min_nbhd [{0,1,2}, {0,1,2}, {2}].
inline topo::Space three_point_witness() {
  return make_space({{0, 1, 2}, {0, 1, 2}, {2}});
}

inline topo::PointSet pts(const topo::Space& s, const std::vector<int>& members) {
  topo::PointSet out(s.size());
  for (int x : members) out = out.with(x);
  return out;
}

}  // namespace testutil
