#pragma once

#include "spf/polynomial.hpp"
#include "spf/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spf {

/// Element of the differential field Q(x) with derivation d/dx.
///
/// Kept in normal form: numerator and denominator coprime, denominator monic,
/// zero stored as 0/1. Equal field elements therefore compare equal
/// representationally.
class RationalFunction {
public:
  RationalFunction() : den_(1) {}
  RationalFunction(int c) : num_(Rat(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(UPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(UPoly num, UPoly den);

  static RationalFunction x() { return RationalFunction(UPoly::variable()); }

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// True for elements of the constant field Q.
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  /// Value of a constant element; throws PreconditionViolated otherwise.
  Rat constant_value() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

private:
  struct Reduced {};
  RationalFunction(UPoly num, UPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  UPoly num_;
  UPoly den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline bool is_one(const RationalFunction& f) { return f.is_constant() && f.numerator().coeff(0) == 1; }

RationalFunction pow(const RationalFunction& f, int exponent);

/// Quotient-rule derivative d/dx.
RationalFunction derive(const RationalFunction& f);
/// k-th derivative.
RationalFunction derive(const RationalFunction& f, int k);

/// Exact value f(x0); throws PoleError when the denominator vanishes at x0.
Rat evaluate_at(const RationalFunction& f, const Rat& x0);

/// Rational antiderivative by Hermite reduction with the integration constant
/// fixed so that the result has no constant term in its partial-fraction form.
/// Throws LogarithmicPart when the integral is not rational.
RationalFunction rational_antiderivative(const RationalFunction& f);

/// Squarefree decomposition of a nonzero polynomial over Q.
inline std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  return squarefree_decomposition<Rat>(p);
}

std::string to_string(const UPoly& p, std::string_view var = "x");
std::string to_string(const RationalFunction& f, std::string_view var = "x");

}  // namespace spf
