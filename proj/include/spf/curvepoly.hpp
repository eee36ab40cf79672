#pragma once

#include "spf/linalg.hpp"
#include "spf/mpoly.hpp"
#include "spf/ratfunc.hpp"

#include <array>
#include <optional>
#include <string>

namespace spf {

/// Polynomial in lambda, mu, gamma over K = Q(x).
using CurvePoly = MPoly3<RationalFunction>;
using PolyMatrix = Matrix<CurvePoly>;
using Point3 = std::array<Rat, 3>;

CurvePoly determinant(const PolyMatrix& m);

RationalFunction eval_point(const CurvePoly& f, const Point3& p);

/// (df/dlambda, df/dmu, df/dgamma).
std::array<CurvePoly, 3> jacobian_row(const CurvePoly& f);

/// Whether every coefficient lies in Q.
bool is_constant_in_x(const CurvePoly& f);

struct SquarefreeResult {
  bool squarefree = true;
  /// Product of the repeated irreducible-free factors, primitive over Q[mu].
  std::optional<CurvePoly> certificate;
};

/// Squarefreeness of a constant-coefficient polynomial in mu and gamma:
/// content in Q[mu] plus the primitive part over Q(mu)[gamma].
SquarefreeResult squarefree_test_const(const CurvePoly& f);

/// Canonical text: grlex terms, coefficients as reduced fractions.
std::string to_string(const CurvePoly& f);

}  // namespace spf
