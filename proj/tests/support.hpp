#pragma once

#include "spf/expr.hpp"
#include "spf/spectral.hpp"

#include <initializer_list>
#include <random>
#include <string>

namespace spf::test {

inline RationalFunction rf(const std::string& text, const Bindings& b = {}) { return parse_ratfunc(text, b); }
inline CurvePoly cp(const std::string& text, const Bindings& b = {}) { return parse_curvepoly(text, b); }

/// Operator from coefficient texts, lowest order first.
inline DiffOp op(std::initializer_list<const char*> coeffs) {
  std::vector<RationalFunction> c;
  for (const char* s : coeffs) c.push_back(rf(s));
  return DiffOp(std::move(c));
}

inline Bindings with_h(const Rat& h) { return {{"h", h}}; }

// L = d^3 - 6/x^2 d + 12/x^3 + h
inline Potentials nonplanar(const Rat& h) { return Potentials::from_u(rf("12/x^3 + h", with_h(h)), rf("-6/x^2")); }
// L = d^3 - 15/x^2 d + 15/x^3 + h
inline Potentials planar(const Rat& h) { return Potentials::from_u(rf("15/x^3 + h", with_h(h)), rf("-15/x^2")); }

template <class P>
bool equal_up_to_sign(const P& a, const P& b) {
  return a == b || a == -b;
}

/// Deterministic source of small random exact objects.
class Random {
public:
  explicit Random(unsigned seed) : gen_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Rat rational(int bound = 5) {
    const int d = integer(1, bound);
    return Rat(integer(-bound, bound)) / d;
  }
  Rat nonzero_rational(int bound = 5) {
    Rat r;
    do r = rational(bound);
    while (r == 0);
    return r;
  }

  UPoly poly(int degree, int bound = 3) {
    std::vector<Rat> c;
    for (int k = 0; k <= degree; ++k) c.push_back(Rat(integer(-bound, bound)));
    return UPoly(std::move(c));
  }

  /// p / (x - a)^k with small data.
  RationalFunction ratfunc(int max_degree = 2) {
    const UPoly num = poly(integer(0, max_degree));
    const int k = integer(0, 2);
    UPoly den(Rat(1));
    const UPoly lin(std::vector<Rat>{Rat(integer(-2, 2)), Rat(1)});
    for (int i = 0; i < k; ++i) den = den * lin;
    return RationalFunction(num, den);
  }

  DiffOp diffop(int max_order, int coeff_degree = 1) {
    std::vector<RationalFunction> c;
    const int n = integer(0, max_order);
    for (int k = 0; k <= n; ++k) c.push_back(ratfunc(coeff_degree));
    c.back() = c.back().is_zero() ? RationalFunction(1) : c.back();
    return DiffOp(std::move(c));
  }

  CurvePoly curvepoly(int terms, int max_degree) {
    CurvePoly p;
    for (int t = 0; t < terms; ++t) {
      Exponent e{0, 0, 0};
      int budget = integer(0, max_degree);
      for (int v = 0; v < 3 && budget > 0; ++v) {
        const int k = integer(0, budget);
        e[v] = k;
        budget -= k;
      }
      p += CurvePoly::term(ratfunc(1), e);
    }
    return p;
  }

private:
  std::mt19937 gen_;
};

}  // namespace spf::test
