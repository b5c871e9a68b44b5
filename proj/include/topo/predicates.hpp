#pragma once

// Set-level and space-level predicate decisions. Each kind maps to exactly
// one decision rule (part of the contract):
//
//   open            interior(A) == A
//   closed          closure(A) == A
//   dense           closure(A) == X
//   semi_open       A subset of closure(interior(A))
//   semi_closed     consolidation(A) subset of A
//   preopen         A subset of consolidation(A)            (locally dense)
//   regular_open    A == consolidation(A)
//   regular_closed  A == closure(interior(A))
//   nowhere_dense   consolidation(A) == {}
//   beta_open       A subset of closure(consolidation(A))
//   locally_closed  A open in subspace(S, closure(A))
//
//   t0              distinct points have distinct minimal neighborhoods
//   t1              every singleton closed
//   t_d             every singleton locally closed; computed both this way
//                   and as "derived_set({x}) closed for every x", asserting
//                   agreement
//   semi_t_d        every singleton open or semi-closed
//   dense_in_itself open_screen(S) == {}
//   trace_space     is_alpha_scattered on the full set
//
// Every predicate is true by vacuity on the empty set / empty space.

#include <optional>
#include <string_view>

#include "topo/operators.hpp"
#include "topo/space.hpp"

namespace topo {

enum class SetPredicateKind {
  Open,
  Closed,
  Dense,
  SemiOpen,
  SemiClosed,
  Preopen,
  RegularOpen,
  RegularClosed,
  NowhereDense,
  BetaOpen,
  LocallyClosed,
};

enum class SpacePredicateKind {
  T0,
  T1,
  TD,
  SemiTD,
  DenseInItself,
  TraceSpace,
};

bool set_predicate(const Space& s, const PointSet& a, SetPredicateKind kind);
bool space_predicate(const Space& s, SpacePredicateKind kind);

inline constexpr int kBetaOracleCap = 16;

/// Existential oracle for beta-openness: true iff A is dense in some regular
/// closed subspace, decided by scanning all 2^n candidate subspaces. Kept
/// permanently alongside the formula route; their agreement is an acceptance
/// criterion, not an assumption. Throws OracleCapExceeded past `cap` points.
bool beta_open_direct(const Space& s, const PointSet& a, int cap = kBetaOracleCap);

struct ScatterResult {
  bool scattered;
  int rank;  // least k with A_k empty when scattered; peeling rounds performed otherwise
};

/// Cantor-Bendixson peeling: A_{k+1} = A_k \ isolated_points(A_k). The set is
/// scattered iff the iteration reaches the empty set; it strictly decreases
/// or stops, so at most n rounds run.
ScatterResult is_scattered(const Space& s, const PointSet& a);

/// True iff the isolated points of A are dense in the subspace on A;
/// equivalently A has a fenestration by singletons ("trace space" when A is
/// the full set).
bool is_alpha_scattered(const Space& s, const PointSet& a);

/// The witness fenestration behind is_alpha_scattered: the set I(A) whose
/// singletons are pairwise disjoint, open in the subspace on A, and have
/// dense union there.
PointSet alpha_scattered_witness(const Space& s, const PointSet& a);

// Canonical identifiers, shared by the expression language and reports.
std::string_view to_string(SetPredicateKind kind);
std::string_view to_string(SpacePredicateKind kind);
std::optional<SetPredicateKind> set_predicate_from_name(std::string_view name);
std::optional<SpacePredicateKind> space_predicate_from_name(std::string_view name);

}  // namespace topo
