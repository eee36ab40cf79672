#pragma once

#include "spf/mpoly.hpp"
#include "spf/ratfunc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace spf {

/// Ordinary differential operator a_0 + a_1 d + ... + a_n d^n in Q(x)[d],
/// where d∘f = f d + f'. Trimmed so a_n != 0 unless the operator is zero.
class DiffOp {
public:
  DiffOp() = default;
  DiffOp(const RationalFunction& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  DiffOp(int c) : DiffOp(RationalFunction(c)) {}  // NOLINT(google-explicit-constructor)
  explicit DiffOp(std::vector<RationalFunction> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// d^k.
  static DiffOp d(int k = 1) {
    std::vector<RationalFunction> c(static_cast<std::size_t>(k) + 1);
    c.back() = RationalFunction(1);
    return DiffOp(std::move(c));
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  RationalFunction coeff(int k) const {
    if (k < 0 || k > order()) return {};
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const RationalFunction& leading() const { return coeffs_.back(); }
  const std::vector<RationalFunction>& coefficients() const { return coeffs_; }

  DiffOp monic() const;

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<RationalFunction> coeffs_;
};

/// Left multiplication by a field element: c * a.
DiffOp scale(const DiffOp& a, const RationalFunction& c);

/// d∘a.
DiffOp shift(const DiffOp& a);

/// Noncommutative product a∘b.
DiffOp compose(const DiffOp& a, const DiffOp& b);
inline DiffOp operator*(const DiffOp& a, const DiffOp& b) { return compose(a, b); }

/// a∘b - b∘a.
DiffOp commutator(const DiffOp& a, const DiffOp& b);

/// Right Euclidean division: a = q∘b + r with order(r) < order(b).
std::pair<DiffOp, DiffOp> right_divmod(const DiffOp& a, const DiffOp& b);

/// Monic greatest common right divisor by the Euclidean algorithm.
DiffOp right_gcd(const DiffOp& a, const DiffOp& b);

/// Substitutes lambda -> l, mu -> a1, gamma -> a2 in a polynomial with
/// constant coefficients. The operators are assumed to commute pairwise.
DiffOp operator_poly_eval(const MPoly3<RationalFunction>& f, const DiffOp& l, const DiffOp& a1,
                          const DiffOp& a2);

/// Human-readable form, highest power first, `d` standing for d/dx.
std::string to_string(const DiffOp& a);

}  // namespace spf
