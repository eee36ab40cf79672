#pragma once

#include "spf/errors.hpp"
#include "spf/rational.hpp"

#include <cassert>
#include <utility>
#include <vector>

namespace spf {

/// Dense univariate polynomial over an exact field `F`.
///
/// Coefficients are stored lowest degree first and trimmed so that the
/// leading coefficient is nonzero; the zero polynomial has no coefficients and
/// degree -1. `F` must provide construction from `int`, the four field
/// operations, `==`, and a free `is_zero(const F&)`.
template <class F>
class Polynomial {
public:
  using Field = F;

  Polynomial() = default;
  Polynomial(const F& c) {  // NOLINT(google-explicit-constructor)
    if (!detail::coeff_is_zero(c)) coeffs_.push_back(c);
  }
  Polynomial(int c) : Polynomial(F(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const F& c, int degree) {
    if (detail::coeff_is_zero(c)) return {};
    std::vector<F> v(static_cast<std::size_t>(degree) + 1, F(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  static Polynomial variable() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  F coeff(int k) const {
    if (k < 0 || k > degree()) return F(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const F& leading() const {
    assert(!coeffs_.empty());
    return coeffs_.back();
  }
  const std::vector<F>& coefficients() const { return coeffs_; }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this / leading();
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<F> d(coeffs_.size() - 1, F(0));
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * F(static_cast<int>(k));
    return Polynomial(std::move(d));
  }

  /// Horner evaluation.
  F operator()(const F& x) const {
    F acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] = r[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const Polynomial& a, const F& c) {
    if (detail::coeff_is_zero(c)) return {};
    Polynomial r = a;
    for (auto& x : r.coeffs_) x = x * c;
    r.trim();
    return r;
  }
  friend Polynomial operator*(const F& c, const Polynomial& a) { return a * c; }
  friend Polynomial operator/(const Polynomial& a, const F& c) {
    if (detail::coeff_is_zero(c)) throw DivisionByZero("polynomial divided by zero scalar");
    Polynomial r = a;
    for (auto& x : r.coeffs_) x = x / c;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

template <class F>
bool is_zero(const Polynomial<F>& p) {
  return p.is_zero();
}

using UPoly = Polynomial<Rat>;

/// Euclidean division a = q*b + r with deg r < deg b.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<F>(), a};
  std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F(0));
  std::vector<F> r = a.coefficients();
  const F lead = b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const F& top = r[static_cast<std::size_t>(k)];
    if (is_zero(top)) continue;
    F t = top / lead;
    q[static_cast<std::size_t>(k - db)] = t;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(k - db + j)];
      slot = slot - t * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial<F>(std::move(q)), Polynomial<F>(std::move(r))};
}

/// Quotient of a division known to be exact; throws InexactDivision otherwise.
template <class F>
Polynomial<F> exact_quotient(const Polynomial<F>& a, const Polynomial<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InexactDivision("polynomial division leaves a remainder");
  return q;
}

/// Monic greatest common divisor (zero when both inputs are zero).
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Solves s*a + t*b = c with deg s < deg b (requires gcd(a, b) | c).
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> solve_bezout(const Polynomial<F>& a, const Polynomial<F>& b,
                                                     const Polynomial<F>& c) {
  // Extended Euclid on (a, b) tracking the cofactor of a.
  Polynomial<F> r0 = a, r1 = b, s0 = F(1), s1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial<F> s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 = s0*a + t0*b is the (non-monic) gcd.
  auto [cq, crem] = divmod(c, r0);
  if (!crem.is_zero()) throw InexactDivision("right-hand side not divisible by gcd");
  Polynomial<F> s = s0 * cq;
  if (b.degree() > 0) s = divmod(s, b).second;
  Polynomial<F> t = exact_quotient(c - s * a, b);
  return {s, t};
}

/// Yun's squarefree decomposition: p = lc(p) * prod factor^multiplicity with
/// monic, squarefree, pairwise coprime factors listed by increasing multiplicity.
template <class F>
std::vector<std::pair<Polynomial<F>, int>> squarefree_decomposition(const Polynomial<F>& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<Polynomial<F>, int>> out;
  if (p.degree() == 0) return out;
  const Polynomial<F> f = p.monic();
  const Polynomial<F> fp = f.derivative();
  const Polynomial<F> a0 = gcd(f, fp);
  Polynomial<F> b = exact_quotient(f, a0);
  Polynomial<F> c = exact_quotient(fp, a0);
  Polynomial<F> d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Polynomial<F> a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(std::move(a), i);
  }
  return out;
}

template <class F>
bool is_squarefree(const Polynomial<F>& p) {
  return gcd(p, p.derivative()).degree() <= 0;
}

}  // namespace spf
