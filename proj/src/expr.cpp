#include "spf/expr.hpp"

#include <cctype>

namespace spf {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Expr node(ExprNode::Kind k, std::size_t pos, Expr lhs, Expr rhs = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->pos = pos;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  Expr expr() {
    skip();
    const std::size_t start = pos_;
    Expr e = term();
    for (;;) {
      if (accept('+'))
        e = node(ExprNode::Kind::Add, start, e, term());
      else if (accept('-'))
        e = node(ExprNode::Kind::Sub, start, e, term());
      else
        return e;
    }
  }

  Expr term() {
    skip();
    const std::size_t start = pos_;
    Expr e = factor();
    for (;;) {
      if (accept('*'))
        e = node(ExprNode::Kind::Mul, start, e, factor());
      else if (accept('/'))
        e = node(ExprNode::Kind::Div, start, e, factor());
      else
        return e;
    }
  }

  Expr factor() {
    skip();
    const std::size_t start = pos_;
    if (accept('-')) return node(ExprNode::Kind::Neg, start, factor());
    if (accept('+')) return factor();
    Expr b = base();
    if (!accept('^')) return b;
    skip();
    const std::size_t epos = pos_;
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    skip();
    const std::string digits = integer();
    if (digits.empty()) fail("expected an integer exponent");
    if (digits.size() > 6) {
      pos_ = epos;
      fail("exponent too large");
    }
    auto n = std::make_shared<ExprNode>(*node(ExprNode::Kind::Pow, start, b));
    n->exponent = (negative ? -1 : 1) * std::stoi(digits);
    return n;
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Expr base() {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (accept('(')) {
      Expr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Number;
      n->value = Rat(Integer(integer()));
      n->pos = start;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Symbol;
      n->name = std::string(text_.substr(start, pos_ - start));
      n->pos = start;
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const Rat& lookup(const ExprNode& n, const Bindings& bindings) {
  auto it = bindings.find(n.name);
  if (it == bindings.end()) throw UnboundConstant("unbound constant '" + n.name + "' at position " + std::to_string(n.pos));
  return it->second;
}

bool is_scalar(const CurvePoly& p) {
  return p.is_zero() || (p.size() == 1 && p.leading().first == Exponent{0, 0, 0});
}

RationalFunction scalar_value(const CurvePoly& p) { return p.is_zero() ? RationalFunction() : p.leading().second; }

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

RationalFunction eval_ratfunc(const Expr& e, const Bindings& bindings, std::string_view var) {
  using K = ExprNode::Kind;
  switch (e->kind) {
    case K::Number: return e->value;
    case K::Symbol: return e->name == var ? RationalFunction::x() : RationalFunction(lookup(*e, bindings));
    case K::Neg: return -eval_ratfunc(e->lhs, bindings, var);
    case K::Add: return eval_ratfunc(e->lhs, bindings, var) + eval_ratfunc(e->rhs, bindings, var);
    case K::Sub: return eval_ratfunc(e->lhs, bindings, var) - eval_ratfunc(e->rhs, bindings, var);
    case K::Mul: return eval_ratfunc(e->lhs, bindings, var) * eval_ratfunc(e->rhs, bindings, var);
    case K::Div: {
      const RationalFunction d = eval_ratfunc(e->rhs, bindings, var);
      if (d.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(e->rhs->pos));
      return eval_ratfunc(e->lhs, bindings, var) / d;
    }
    case K::Pow: {
      const RationalFunction b = eval_ratfunc(e->lhs, bindings, var);
      if (b.is_zero() && e->exponent < 0)
        throw DivisionByZero("negative power of zero at position " + std::to_string(e->pos));
      return pow(b, e->exponent);
    }
  }
  throw ParseError("malformed expression");
}

CurvePoly eval_curvepoly(const Expr& e, const Bindings& bindings) {
  using K = ExprNode::Kind;
  switch (e->kind) {
    case K::Number: return CurvePoly(RationalFunction(e->value));
    case K::Symbol:
      if (e->name == "x") return CurvePoly(RationalFunction::x());
      if (e->name == "lambda") return CurvePoly::var(Var::Lambda);
      if (e->name == "mu") return CurvePoly::var(Var::Mu);
      if (e->name == "gamma") return CurvePoly::var(Var::Gamma);
      return CurvePoly(RationalFunction(lookup(*e, bindings)));
    case K::Neg: return -eval_curvepoly(e->lhs, bindings);
    case K::Add: return eval_curvepoly(e->lhs, bindings) + eval_curvepoly(e->rhs, bindings);
    case K::Sub: return eval_curvepoly(e->lhs, bindings) - eval_curvepoly(e->rhs, bindings);
    case K::Mul: return eval_curvepoly(e->lhs, bindings) * eval_curvepoly(e->rhs, bindings);
    case K::Div: {
      const CurvePoly d = eval_curvepoly(e->rhs, bindings);
      if (!is_scalar(d))
        throw ParseError("position " + std::to_string(e->rhs->pos) + ": division by a polynomial in lambda, mu, gamma");
      if (d.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(e->rhs->pos));
      return scale(eval_curvepoly(e->lhs, bindings), RationalFunction(1) / scalar_value(d));
    }
    case K::Pow: {
      const CurvePoly b = eval_curvepoly(e->lhs, bindings);
      if (e->exponent >= 0) return pow(b, e->exponent);
      if (!is_scalar(b))
        throw ParseError("position " + std::to_string(e->pos) + ": negative power of a polynomial in lambda, mu, gamma");
      if (b.is_zero()) throw DivisionByZero("negative power of zero at position " + std::to_string(e->pos));
      return CurvePoly(pow(scalar_value(b), e->exponent));
    }
  }
  throw ParseError("malformed expression");
}

RationalFunction parse_ratfunc(std::string_view text, const Bindings& bindings, std::string_view var) {
  return eval_ratfunc(parse_expr(text), bindings, var);
}

CurvePoly parse_curvepoly(std::string_view text, const Bindings& bindings) {
  return eval_curvepoly(parse_expr(text), bindings);
}

UPoly parse_upoly(std::string_view text, const Bindings& bindings, std::string_view var) {
  const RationalFunction f = parse_ratfunc(text, bindings, var);
  if (!f.is_polynomial()) throw ParseError("'" + std::string(text) + "' is not a polynomial in " + std::string(var));
  return f.numerator();
}

}  // namespace spf
