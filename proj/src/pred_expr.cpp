#include "topo/pred_expr.hpp"

#include <cctype>

#include "topo/error.hpp"

namespace topo {

struct PredExpr::Node {
  enum class Kind { And, Or, Not, SetPred, Scattered, AlphaScattered, SpacePred };

  Kind kind;
  std::shared_ptr<const Node> lhs;  // And/Or left child, Not operand
  std::shared_ptr<const Node> rhs;  // And/Or right child
  SetPredicateKind set_kind = SetPredicateKind::Open;
  SpacePredicateKind space_kind = SpacePredicateKind::T0;
};

// Parser over a flat token view; positions are byte offsets into the input.
namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(pos, what); }
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

struct PredExprBuilder {
  using NodePtr = std::shared_ptr<const PredExpr::Node>;

  static NodePtr make(PredExpr::Node node) {
    return std::make_shared<const PredExpr::Node>(std::move(node));
  }

  static NodePtr parse_or(Parser& p);

  static NodePtr parse_leaf(Parser& p) {
    const std::size_t start = p.pos;
    std::size_t end = start;
    while (end < p.text.size() && name_char(p.text[end])) ++end;
    if (end == start) p.fail("expected a predicate name");
    std::string name(p.text.substr(start, end - start));
    p.pos = end;

    constexpr std::string_view kSpacePrefix = "space:";
    if (name.rfind(kSpacePrefix, 0) == 0) {
      const std::string bare = name.substr(kSpacePrefix.size());
      if (auto kind = space_predicate_from_name(bare)) {
        PredExpr::Node node;
        node.kind = PredExpr::Node::Kind::SpacePred;
        node.space_kind = *kind;
        return make(std::move(node));
      }
      throw UnknownPredicate(name);
    }
    if (name == "scattered") {
      PredExpr::Node node;
      node.kind = PredExpr::Node::Kind::Scattered;
      return make(std::move(node));
    }
    if (name == "alpha_scattered") {
      PredExpr::Node node;
      node.kind = PredExpr::Node::Kind::AlphaScattered;
      return make(std::move(node));
    }
    if (auto kind = set_predicate_from_name(name)) {
      PredExpr::Node node;
      node.kind = PredExpr::Node::Kind::SetPred;
      node.set_kind = *kind;
      return make(std::move(node));
    }
    throw UnknownPredicate(name);
  }

  static NodePtr parse_unary(Parser& p) {
    const char c = p.peek();
    if (c == '!') {
      ++p.pos;
      PredExpr::Node node;
      node.kind = PredExpr::Node::Kind::Not;
      node.lhs = parse_unary(p);
      return make(std::move(node));
    }
    if (c == '(') {
      ++p.pos;
      NodePtr inner = parse_or(p);
      if (p.peek() != ')') p.fail("expected ')'");
      ++p.pos;
      return inner;
    }
    if (c == '\0') p.fail("unexpected end of expression");
    return parse_leaf(p);
  }

  static NodePtr parse_and(Parser& p) {
    NodePtr left = parse_unary(p);
    while (p.peek() == '&') {
      ++p.pos;
      PredExpr::Node node;
      node.kind = PredExpr::Node::Kind::And;
      node.lhs = std::move(left);
      node.rhs = parse_unary(p);
      left = make(std::move(node));
    }
    return left;
  }
};

PredExprBuilder::NodePtr PredExprBuilder::parse_or(Parser& p) {
  NodePtr left = parse_and(p);
  while (p.peek() == '|') {
    ++p.pos;
    PredExpr::Node node;
    node.kind = PredExpr::Node::Kind::Or;
    node.lhs = std::move(left);
    node.rhs = parse_and(p);
    left = make(std::move(node));
  }
  return left;
}

}  // namespace

PredExpr PredExpr::parse(std::string_view text) {
  Parser p{text};
  NodePtr root = PredExprBuilder::parse_or(p);
  if (!p.at_end()) p.fail("unexpected trailing input");
  return PredExpr(std::move(root));
}

namespace {

bool eval_node(const PredExpr::Node& node, const Space& s, const PointSet& subset) {
  using Kind = PredExpr::Node::Kind;
  switch (node.kind) {
    case Kind::And:
      return eval_node(*node.lhs, s, subset) && eval_node(*node.rhs, s, subset);
    case Kind::Or:
      return eval_node(*node.lhs, s, subset) || eval_node(*node.rhs, s, subset);
    case Kind::Not:
      return !eval_node(*node.lhs, s, subset);
    case Kind::SetPred:
      return set_predicate(s, subset, node.set_kind);
    case Kind::Scattered:
      return is_scattered(s, subset).scattered;
    case Kind::AlphaScattered:
      return is_alpha_scattered(s, subset);
    case Kind::SpacePred:
      return space_predicate(s, node.space_kind);
  }
  throw Error("PredExpr::eval: unreachable node kind");
}

bool space_only_node(const PredExpr::Node& node) {
  using Kind = PredExpr::Node::Kind;
  switch (node.kind) {
    case Kind::And:
    case Kind::Or:
      return space_only_node(*node.lhs) && space_only_node(*node.rhs);
    case Kind::Not:
      return space_only_node(*node.lhs);
    case Kind::SpacePred:
      return true;
    default:
      return false;
  }
}

int precedence(PredExpr::Node::Kind kind) {
  using Kind = PredExpr::Node::Kind;
  switch (kind) {
    case Kind::Or: return 1;
    case Kind::And: return 2;
    case Kind::Not: return 3;
    default: return 4;
  }
}

void pretty_node(const PredExpr::Node& node, std::string& out) {
  using Kind = PredExpr::Node::Kind;
  const int prec = precedence(node.kind);
  auto child = [&](const PredExpr::Node& sub, bool strict) {
    const bool parens = precedence(sub.kind) < prec + (strict ? 1 : 0);
    if (parens) out += '(';
    pretty_node(sub, out);
    if (parens) out += ')';
  };
  switch (node.kind) {
    case Kind::And:
      child(*node.lhs, false);
      out += " & ";
      child(*node.rhs, true);  // right-assoc child needs parens at equal precedence
      return;
    case Kind::Or:
      child(*node.lhs, false);
      out += " | ";
      child(*node.rhs, true);
      return;
    case Kind::Not:
      out += '!';
      child(*node.lhs, false);
      return;
    case Kind::SetPred:
      out += to_string(node.set_kind);
      return;
    case Kind::Scattered:
      out += "scattered";
      return;
    case Kind::AlphaScattered:
      out += "alpha_scattered";
      return;
    case Kind::SpacePred:
      out += "space:";
      out += to_string(node.space_kind);
      return;
  }
}

}  // namespace

bool PredExpr::eval(const Space& s, const PointSet& subset) const {
  return eval_node(*root_, s, subset);
}

bool PredExpr::space_level_only() const { return space_only_node(*root_); }

std::string PredExpr::pretty() const {
  std::string out;
  pretty_node(*root_, out);
  return out;
}

}  // namespace topo
