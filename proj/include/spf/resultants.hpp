#pragma once

#include "spf/curvepoly.hpp"
#include "spf/diffop.hpp"

namespace spf {

/// The operators p - ind_p and q - ind_q.
struct SpectralPair {
  DiffOp p, q;
  Var ind_p = Var::Lambda, ind_q = Var::Mu;
};

/// (n+m) x (n+m) coefficient matrix of d^{m-1}(p - ind_p), ..., p - ind_p,
/// d^{n-1}(q - ind_q), ..., q - ind_q; columns d^{n+m-1} .. d^0.
PolyMatrix sylvester_s0(const SpectralPair& pair);

/// det S0; throws NotXFree if the result depends on x.
CurvePoly diff_resultant(const SpectralPair& pair);

/// (n+m-2) x (n+m-1) matrix of d^{m-2}(p - ind_p), ..., d^{n-2}(q - ind_q), ...;
/// throws OrderTooSmall unless both orders are at least 2.
PolyMatrix sylvester_s1(const SpectralPair& pair);

struct Subresultant {
  /// det with the d^1 column removed.
  CurvePoly phi0;
  /// det with the d^0 column removed.
  CurvePoly phi1;
};

/// First subresultant phi1 d + phi0, unnormalized.
Subresultant first_subresultant(const SpectralPair& pair);

/// Fixes the sign so that the highest pure power of `second` has a negative
/// coefficient. Polynomials without such a term are returned unchanged.
CurvePoly sign_normalized(const CurvePoly& f, Var second);

}  // namespace spf
