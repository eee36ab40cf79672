#include "spf/diffop.hpp"

#include <map>

namespace spf {

DiffOp DiffOp::monic() const {
  if (is_zero()) return *this;
  const RationalFunction inv = RationalFunction(1) / leading();
  return scale(*this, inv);
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

DiffOp scale(const DiffOp& a, const RationalFunction& c) {
  if (c.is_zero()) return {};
  std::vector<RationalFunction> r = a.coefficients();
  for (auto& x : r) x *= c;
  return DiffOp(std::move(r));
}

DiffOp shift(const DiffOp& a) {
  if (a.is_zero()) return {};
  std::vector<RationalFunction> r(a.coefficients().size() + 1);
  for (std::size_t k = 0; k < a.coefficients().size(); ++k) {
    const RationalFunction& c = a.coefficients()[k];
    r[k] += derive(c);
    r[k + 1] += c;
  }
  return DiffOp(std::move(r));
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() || b.is_zero()) return {};
  DiffOp result;
  DiffOp power = b;  // d^i∘b
  for (int i = 0; i <= a.order(); ++i) {
    const RationalFunction& c = a.coefficients()[static_cast<std::size_t>(i)];
    if (!c.is_zero()) result += scale(power, c);
    if (i < a.order()) power = shift(power);
  }
  return result;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

std::pair<DiffOp, DiffOp> right_divmod(const DiffOp& a, const DiffOp& b) {
  if (b.is_zero()) throw DivisionByZeroOperator("right division by the zero operator");
  if (a.order() < b.order()) return {DiffOp(), a};
  const int span = a.order() - b.order();
  std::vector<DiffOp> shifted{b};  // d^k∘b
  for (int k = 1; k <= span; ++k) shifted.push_back(shift(shifted.back()));

  std::vector<RationalFunction> q(static_cast<std::size_t>(span) + 1);
  DiffOp r = a;
  const RationalFunction inv_lead = RationalFunction(1) / b.leading();
  while (!r.is_zero() && r.order() >= b.order()) {
    const int k = r.order() - b.order();
    const RationalFunction t = r.leading() * inv_lead;
    q[static_cast<std::size_t>(k)] += t;
    r -= scale(shifted[static_cast<std::size_t>(k)], t);
  }
  return {DiffOp(std::move(q)), r};
}

DiffOp right_gcd(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() && b.is_zero()) throw PreconditionViolated("right gcd of two zero operators");
  DiffOp x = a, y = b;
  while (!y.is_zero()) {
    DiffOp r = right_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

DiffOp operator_poly_eval(const MPoly3<RationalFunction>& f, const DiffOp& l, const DiffOp& a1,
                          const DiffOp& a2) {
  const std::array<const DiffOp*, 3> base{&l, &a1, &a2};
  std::array<std::vector<DiffOp>, 3> powers;
  auto power = [&](int var, int k) -> const DiffOp& {
    auto& cache = powers[static_cast<std::size_t>(var)];
    if (cache.empty()) cache.emplace_back(1);
    while (static_cast<int>(cache.size()) <= k) cache.push_back(compose(cache.back(), *base[static_cast<std::size_t>(var)]));
    return cache[static_cast<std::size_t>(k)];
  };
  // Group by (lambda, mu) exponent so each mixed product is composed once.
  DiffOp result;
  std::map<std::pair<int, int>, DiffOp> mixed;
  for (const auto& [e, c] : f.terms()) {
    if (!c.is_constant())
      throw NonConstantCoefficient("operator evaluation needs constant coefficients, found " + to_string(c));
    auto key = std::make_pair(e[0], e[1]);
    auto it = mixed.find(key);
    if (it == mixed.end()) it = mixed.emplace(key, compose(power(0, e[0]), power(1, e[1]))).first;
    result += scale(compose(it->second, power(2, e[2])), c);
  }
  return result;
}

std::string to_string(const DiffOp& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int k = a.order(); k >= 0; --k) {
    const RationalFunction& c = a.coefficients()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    int terms = 0;
    for (const auto& t : c.numerator().coefficients()) terms += t.is_zero() ? 0 : 1;
    std::string ct = to_string(c);
    const bool neg = terms == 1 && ct[0] == '-';
    if (neg) ct = ct.substr(1);
    if (terms > 1) ct = "(" + ct + ")";
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    const std::string dpart = k == 1 ? "d" : "d^" + std::to_string(k);
    if (k == 0)
      out += ct;
    else if (ct == "1")
      out += dpart;
    else
      out += ct + "*" + dpart;
  }
  return out;
}

}  // namespace spf
