#pragma once

#include "spf/ratfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace spf {

/// Potential in the generic differential ring Q{q0, q1}.
enum class Potential : int { Q0 = 0, Q1 = 1 };

/// Differential polynomial over Q in the potentials q0, q1 and their
/// derivatives. Variable q_w^(k) has index 2k + w; this ranking is
/// compatible with the derivation, which `integrate` relies on.
class DiffPoly {
public:
  /// Exponent of each variable by index, trailing zeros trimmed.
  using Monomial = std::vector<int>;

  DiffPoly() = default;
  DiffPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  DiffPoly(int c) : DiffPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  /// The variable q_w^(order).
  static DiffPoly var(Potential w, int order = 0);

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest derivative order present, -1 for constants.
  int max_order() const;

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const Rat& c, const DiffPoly& a);
  friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DiffPoly& a, const DiffPoly& b) { return !(a == b); }

  void add_term(const Monomial& m, const Rat& c);

private:
  std::map<Monomial, Rat> terms_;
};

/// Total derivative.
DiffPoly derive(const DiffPoly& p);
DiffPoly derive(const DiffPoly& p, int k);

/// The unique antiderivative without constant term; throws LogarithmicPart
/// when `p` is not a total derivative in Q{q0, q1}.
DiffPoly integrate(const DiffPoly& p);

/// Concrete potentials together with their derivatives, extended on demand.
class PotentialJets {
public:
  PotentialJets(RationalFunction q0, RationalFunction q1);
  const RationalFunction& get(Potential w, int order);

private:
  std::vector<RationalFunction> q0_, q1_;
};

/// Value of a differential polynomial at concrete potentials.
RationalFunction evaluate(const DiffPoly& p, PotentialJets& jets);

std::string to_string(const DiffPoly& p);

}  // namespace spf
