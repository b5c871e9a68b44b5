#pragma once

// Boolean expression trees over the registered predicate names, for the
// search command and enumeration filters.
//
// Grammar (NOT binds tightest, AND over OR):
//   or_expr  := and_expr ('|' and_expr)*
//   and_expr := unary ('&' unary)*
//   unary    := '!' unary | '(' or_expr ')' | name
//   name     := set predicate | "scattered" | "alpha_scattered"
//             | "space:" space predicate
//
// Evaluation is total given a space and a subset; space-level leaves ignore
// the subset.

#include <memory>
#include <string>
#include <string_view>

#include "topo/predicates.hpp"

namespace topo {

class PredExpr {
 public:
  struct Node;  // implementation detail; defined in pred_expr.cpp

  /// Throws SyntaxError (0-based column) or UnknownPredicate.
  static PredExpr parse(std::string_view text);

  bool eval(const Space& s, const PointSet& subset) const;

  /// True when every leaf is a space-level predicate (subset irrelevant).
  bool space_level_only() const;

  /// Canonical rendering; parse(pretty()) is structurally identical, so
  /// pretty-printing is a fixpoint from the second iteration on.
  std::string pretty() const;

 private:
  using NodePtr = std::shared_ptr<const Node>;

  explicit PredExpr(NodePtr root) : root_(std::move(root)) {}

  NodePtr root_;
};

}  // namespace topo
