#pragma once

// Exact topological operators on subsets of a finite space. On a
// minimal-neighborhood table all of these are linear scans:
//
//   closure(A)          {x : min_nbhd[x] meets A}
//   interior(A)         {x in A : min_nbhd[x] subset of A}
//   consolidation(A)    interior(closure(A))
//   derived_set(A)      {x : (min_nbhd[x] \ {x}) meets A}
//   isolated_points(A)  {x in A : min_nbhd[x] & A == {x}}
//   open_screen(S)      isolated_points of the whole space
//
// All operators are total; on the empty set and the empty space each
// returns the empty set.

#include <string>
#include <string_view>

#include "topo/space.hpp"

namespace topo {

PointSet closure(const Space& s, const PointSet& a);
PointSet interior(const Space& s, const PointSet& a);
PointSet consolidation(const Space& s, const PointSet& a);
PointSet derived_set(const Space& s, const PointSet& a);
PointSet isolated_points(const Space& s, const PointSet& a);
PointSet open_screen(const Space& s);

struct OperatorResult {
  std::string operator_name;
  PointSet input;
  PointSet output;
};

/// Name-dispatched application for the CLI. Names: closure, interior,
/// consolidation, derived, isolated, screen (screen ignores the subset).
/// Throws UnknownPredicate for an unrecognized name.
OperatorResult apply_operator(const Space& s, std::string_view name, const PointSet& a);

}  // namespace topo
