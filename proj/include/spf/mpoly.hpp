#pragma once

#include "spf/errors.hpp"
#include "spf/rational.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace spf {

/// Exponent triple (i, j, k) of lambda^i mu^j gamma^k.
using Exponent = std::array<int, 3>;

enum class Var : int { Lambda = 0, Mu = 1, Gamma = 2 };

inline const char* var_name(Var v) {
  switch (v) {
    case Var::Lambda: return "lambda";
    case Var::Mu: return "mu";
    case Var::Gamma: return "gamma";
  }
  return "?";
}

/// Graded lexicographic order with lambda > mu > gamma, largest first.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse polynomial in the commuting indeterminates lambda, mu, gamma with
/// coefficients in an exact field `C` (Q(x) for curve and subresultant
/// polynomials, Q once the x-dependence is gone).
template <class C>
class MPoly3 {
public:
  using Coeff = C;
  using TermMap = std::map<Exponent, C, GrlexGreater>;

  MPoly3() = default;
  MPoly3(const C& c) {  // NOLINT(google-explicit-constructor)
    if (!detail::coeff_is_zero(c)) terms_.emplace(Exponent{0, 0, 0}, c);
  }
  MPoly3(int c) : MPoly3(C(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly3 term(const C& c, const Exponent& e) {
    MPoly3 p;
    if (!detail::coeff_is_zero(c)) p.terms_.emplace(e, c);
    return p;
  }
  static MPoly3 var(Var v, int power = 1) {
    Exponent e{0, 0, 0};
    e[static_cast<int>(v)] = power;
    return term(C(1), e);
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }
  const std::pair<const Exponent, C>& leading() const { return *terms_.begin(); }

  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first[0] + terms_.begin()->first[1] + terms_.begin()->first[2]; }
  int degree_in(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
  }
  /// True when every term is free of the given indeterminate.
  bool is_free_of(Var v) const { return degree_in(v) <= 0; }

  MPoly3 operator-() const {
    MPoly3 r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MPoly3& operator+=(const MPoly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly3& operator-=(const MPoly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MPoly3 operator+(MPoly3 a, const MPoly3& b) { return a += b; }
  friend MPoly3 operator-(MPoly3 a, const MPoly3& b) { return a -= b; }

  friend MPoly3 operator*(const MPoly3& a, const MPoly3& b) {
    MPoly3 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }
  MPoly3& operator*=(const MPoly3& o) { return *this = *this * o; }

  friend MPoly3 scale(const MPoly3& a, const C& s) {
    if (detail::coeff_is_zero(s)) return {};
    MPoly3 r = a;
    for (auto& [e, c] : r.terms_) c = c * s;
    return r;
  }

  friend bool operator==(const MPoly3& a, const MPoly3& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly3& a, const MPoly3& b) { return !(a == b); }

  /// Applies `f` to every coefficient, producing a polynomial over another field.
  template <class D, class Fn>
  MPoly3<D> map_coeffs(Fn&& f) const {
    MPoly3<D> r;
    for (const auto& [e, c] : terms_) r += MPoly3<D>::term(f(c), e);
    return r;
  }

  void add_term(const Exponent& e, const C& c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = it->second + c;
    if (detail::coeff_is_zero(it->second)) terms_.erase(it);
  }

private:
  TermMap terms_;
};

template <class C>
bool is_zero(const MPoly3<C>& p) {
  return p.is_zero();
}

template <class C>
MPoly3<C> pow(const MPoly3<C>& p, int n) {
  MPoly3<C> r(1), b = p;
  while (n > 0) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n > 0) b *= b;
  }
  return r;
}

/// Exact quotient a / b in C[lambda, mu, gamma]; throws InexactDivision when b
/// does not divide a.
template <class C>
MPoly3<C> exact_div(const MPoly3<C>& a, const MPoly3<C>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  MPoly3<C> q, r = a;
  const auto& [eb, cb] = b.leading();
  if (b.size() == 1) {
    MPoly3<C> out;
    for (const auto& [e, c] : a.terms()) {
      if (e[0] < eb[0] || e[1] < eb[1] || e[2] < eb[2]) throw InexactDivision("monomial does not divide");
      out.add_term({e[0] - eb[0], e[1] - eb[1], e[2] - eb[2]}, c / cb);
    }
    return out;
  }
  while (!r.is_zero()) {
    const auto [er, cr] = r.leading();
    if (er[0] < eb[0] || er[1] < eb[1] || er[2] < eb[2])
      throw InexactDivision("multivariate division leaves a remainder");
    const auto t = MPoly3<C>::term(cr / cb, {er[0] - eb[0], er[1] - eb[1], er[2] - eb[2]});
    q += t;
    r -= t * b;
  }
  return q;
}

/// Formal partial derivative with respect to one indeterminate.
template <class C>
MPoly3<C> partial(const MPoly3<C>& f, Var v) {
  const int k = static_cast<int>(v);
  MPoly3<C> r;
  for (const auto& [e, c] : f.terms()) {
    if (e[k] == 0) continue;
    Exponent d = e;
    d[k] -= 1;
    r.add_term(d, c * C(e[k]));
  }
  return r;
}

/// Substitutes exact rational values for (lambda, mu, gamma).
template <class C>
C evaluate(const MPoly3<C>& f, const std::array<Rat, 3>& point) {
  C acc(0);
  for (const auto& [e, c] : f.terms()) {
    Rat m(1);
    for (int k = 0; k < 3; ++k)
      for (int p = 0; p < e[k]; ++p) m *= point[static_cast<std::size_t>(k)];
    if (!m.is_zero()) acc = acc + c * C(m);
  }
  return acc;
}

/// Renders terms in grlex order; `coeff_text` renders one coefficient and
/// `atomic` tells whether it needs no parentheses as a factor.
template <class C>
std::string to_string(const MPoly3<C>& f, const std::function<std::string(const C&)>& coeff_text,
                      const std::function<bool(const C&)>& atomic) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    std::string mono;
    for (int k = 0; k < 3; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<Var>(k));
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    std::string ct = coeff_text(c);
    const bool at = atomic(c);
    bool neg = at && !ct.empty() && ct[0] == '-';
    if (neg) ct = ct.substr(1);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (mono.empty()) {
      out += at ? ct : "(" + ct + ")";
    } else if (ct == "1") {
      out += mono;
    } else {
      out += (at ? ct : "(" + ct + ")") + "*" + mono;
    }
  }
  return out;
}

}  // namespace spf
