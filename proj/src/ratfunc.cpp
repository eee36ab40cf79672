#include "spf/ratfunc.hpp"

#include <sstream>

namespace spf {

Rat parse_rat(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  if (slash == std::string::npos) {
    if (!is_int(text)) throw bad();
    return Rat(Integer(strip_plus(text)));
  }
  const std::string p = text.substr(0, slash), q = text.substr(slash + 1);
  if (!is_int(p) || !is_int(q)) throw bad();
  Integer qi(strip_plus(q));
  if (qi == 0) throw DivisionByZero("zero denominator in '" + text + "'");
  return Rat(Integer(strip_plus(p))) / Rat(qi);
}

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (den.degree() > 0) {
    UPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  const Rat lc = den.leading();
  if (lc != 1) {
    num = num / lc;
    den = den / lc;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rat RationalFunction::constant_value() const {
  if (!is_constant()) throw PreconditionViolated("rational function is not constant");
  return num_.coeff(0);
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Reduced{}}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ + b.num_);
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  if (b.is_polynomial()) return RationalFunction(a.num_ + b.num_ * a.den_, a.den_, RationalFunction::Reduced{});
  if (a.is_polynomial()) return RationalFunction(b.num_ + a.num_ * b.den_, b.den_, RationalFunction::Reduced{});
  const UPoly g = gcd(a.den_, b.den_);
  const UPoly ad = exact_quotient(a.den_, g);
  const UPoly bd = exact_quotient(b.den_, g);
  return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return RationalFunction(b.num_ * a.num_.leading(), b.den_, RationalFunction::Reduced{});
  if (b.is_constant()) return RationalFunction(a.num_ * b.num_.leading(), a.den_, RationalFunction::Reduced{});
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
  // Cross-cancel so that the product is already reduced.
  UPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (bd.degree() > 0) {
    UPoly g = gcd(an, bd);
    if (g.degree() > 0) {
      an = exact_quotient(an, g);
      bd = exact_quotient(bd, g);
    }
  }
  if (ad.degree() > 0) {
    UPoly g = gcd(bn, ad);
    if (g.degree() > 0) {
      bn = exact_quotient(bn, g);
      ad = exact_quotient(ad, g);
    }
  }
  return RationalFunction(an * bn, ad * bd, RationalFunction::Reduced{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return a * RationalFunction(b.den_, b.num_);
}

RationalFunction pow(const RationalFunction& f, int exponent) {
  if (exponent < 0) return pow(RationalFunction(1) / f, -exponent);
  RationalFunction result(1), base = f;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

RationalFunction derive(const RationalFunction& f) {
  const UPoly& n = f.numerator();
  const UPoly& d = f.denominator();
  if (d.degree() == 0) return RationalFunction(n.derivative());
  return RationalFunction(n.derivative() * d - n * d.derivative(), d * d);
}

RationalFunction derive(const RationalFunction& f, int k) {
  RationalFunction r = f;
  for (int i = 0; i < k; ++i) r = derive(r);
  return r;
}

Rat evaluate_at(const RationalFunction& f, const Rat& x0) {
  const Rat d = f.denominator()(x0);
  if (d == 0) throw PoleError("evaluation at a pole x = " + x0.str());
  return f.numerator()(x0) / d;
}

RationalFunction rational_antiderivative(const RationalFunction& f) {
  if (f.is_zero()) return {};
  auto [poly_part, rem] = divmod(f.numerator(), f.denominator());

  // Polynomial part: termwise, zero constant.
  std::vector<Rat> integrated(static_cast<std::size_t>(poly_part.degree()) + 2, Rat(0));
  for (int k = 0; k <= poly_part.degree(); ++k)
    integrated[static_cast<std::size_t>(k) + 1] = poly_part.coeff(k) / Rat(k + 1);
  RationalFunction result{UPoly(std::move(integrated))};
  if (rem.is_zero()) return result;

  // Hermite reduction of rem/D.
  UPoly a = rem;
  UPoly d = f.denominator();
  RationalFunction g;
  const auto factors = squarefree_decomposition(d);
  for (const auto& [v, i] : factors) {
    if (i < 2) continue;
    const UPoly vi = [&] {
      UPoly p(1);
      for (int k = 0; k < i; ++k) p *= v;
      return p;
    }();
    const UPoly u = exact_quotient(d, vi);
    const UPoly uvp = u * v.derivative();
    for (int j = i - 1; j >= 1; --j) {
      auto [b, c] = solve_bezout(uvp, v, -a / Rat(j));
      UPoly vj(1);
      for (int k = 0; k < j; ++k) vj *= v;
      g += RationalFunction(b, vj);
      a = -(c * Rat(j)) - u * b.derivative();
    }
    d = u * v;
  }
  if (!RationalFunction(a, d).is_zero())
    throw LogarithmicPart("integral has a logarithmic part: residual " + to_string(RationalFunction(a, d)));
  return result + g;
}

namespace {

std::string monomial_text(const Rat& c, int k, std::string_view var, bool leading) {
  std::ostringstream os;
  const bool neg = c < 0;
  const Rat mag = neg ? Rat(-c) : c;
  if (neg)
    os << (leading ? "-" : "-");
  else if (!leading)
    os << "+";
  if (k == 0) {
    os << mag.str();
    return os.str();
  }
  if (mag != 1) os << mag.str() << "*";
  os << var;
  if (k > 1) os << "^" << k;
  return os.str();
}

int term_count(const UPoly& p) {
  int n = 0;
  for (const auto& c : p.coefficients()) n += c.is_zero() ? 0 : 1;
  return n;
}

}  // namespace

std::string to_string(const UPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    out += monomial_text(c, k, var, out.empty());
  }
  return out;
}

std::string to_string(const RationalFunction& f, std::string_view var) {
  const std::string n = to_string(f.numerator(), var);
  if (f.is_polynomial()) return n;
  const UPoly& d = f.denominator();
  const bool simple_den = term_count(d) == 1 && d.leading() == 1;
  const std::string ds = to_string(d, var);
  const std::string ns = term_count(f.numerator()) == 1 ? n : "(" + n + ")";
  return ns + "/" + (simple_den ? ds : "(" + ds + ")");
}

}  // namespace spf
