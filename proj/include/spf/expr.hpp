#pragma once

#include "spf/curvepoly.hpp"
#include "spf/ratfunc.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace spf {

/// Syntax tree of an arithmetic expression.
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := ('-' | '+') factor | base ('^' signed-int)?
///   base   := integer | identifier | '(' expr ')'
struct ExprNode {
  enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Number;
  Rat value;
  std::string name;
  int exponent = 0;
  std::shared_ptr<const ExprNode> lhs, rhs;
  /// Offset of the node's first character in the source text.
  std::size_t pos = 0;
};

using Expr = std::shared_ptr<const ExprNode>;
using Bindings = std::map<std::string, Rat>;

/// Throws ParseError naming the offending position.
Expr parse_expr(std::string_view text);

/// Evaluates with `var` as the indeterminate and other identifiers taken from
/// `bindings` (UnboundConstant otherwise).
RationalFunction eval_ratfunc(const Expr& e, const Bindings& bindings = {}, std::string_view var = "x");

/// Evaluates over Q(x)[lambda, mu, gamma]; division only by elements of Q(x).
CurvePoly eval_curvepoly(const Expr& e, const Bindings& bindings = {});

RationalFunction parse_ratfunc(std::string_view text, const Bindings& bindings = {}, std::string_view var = "x");
CurvePoly parse_curvepoly(std::string_view text, const Bindings& bindings = {});
/// A polynomial in `var`; ParseError if the value has a denominator.
UPoly parse_upoly(std::string_view text, const Bindings& bindings = {}, std::string_view var = "t");

}  // namespace spf
