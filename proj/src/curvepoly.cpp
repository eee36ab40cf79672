#include "spf/curvepoly.hpp"

#include <map>

namespace spf {

namespace {

/// Polynomials in gamma with coefficients in Q(mu); RationalFunction serves
/// as Q(mu) here.
using GammaPoly = Polynomial<RationalFunction>;

GammaPoly to_gamma_poly(const CurvePoly& f) {
  std::map<int, UPoly> by_gamma;
  for (const auto& [e, c] : f.terms()) {
    auto& slot = by_gamma[e[2]];
    slot += UPoly::monomial(c.constant_value(), e[1]);
  }
  std::vector<RationalFunction> coeffs(static_cast<std::size_t>(by_gamma.rbegin()->first) + 1);
  for (auto& [k, p] : by_gamma) coeffs[static_cast<std::size_t>(k)] = RationalFunction(p);
  return GammaPoly(std::move(coeffs));
}

CurvePoly from_mu_poly(const UPoly& p, int gamma_power = 0) {
  CurvePoly r;
  for (int j = 0; j <= p.degree(); ++j)
    r.add_term({0, j, gamma_power}, RationalFunction(p.coeff(j)));
  return r;
}

/// Scales a gamma-polynomial over Q(mu) into Q[mu][gamma] with coprime
/// coefficients.
CurvePoly primitive_lift(const GammaPoly& g) {
  UPoly common(1);
  for (const auto& c : g.coefficients()) {
    const UPoly& d = c.denominator();
    common = exact_quotient(common * d, gcd(common, d));
  }
  std::vector<UPoly> nums;
  UPoly content;
  for (const auto& c : g.coefficients()) {
    nums.push_back(c.numerator() * exact_quotient(common, c.denominator()));
    content = gcd(content, nums.back());
  }
  CurvePoly r;
  for (std::size_t k = 0; k < nums.size(); ++k)
    if (!nums[k].is_zero()) r += from_mu_poly(exact_quotient(nums[k], content), static_cast<int>(k));
  return r;
}

}  // namespace

CurvePoly determinant(const PolyMatrix& m) { return bareiss_determinant(m); }

RationalFunction eval_point(const CurvePoly& f, const Point3& p) { return evaluate(f, p); }

std::array<CurvePoly, 3> jacobian_row(const CurvePoly& f) {
  return {partial(f, Var::Lambda), partial(f, Var::Mu), partial(f, Var::Gamma)};
}

bool is_constant_in_x(const CurvePoly& f) {
  for (const auto& [e, c] : f.terms())
    if (!c.is_constant()) return false;
  return true;
}

SquarefreeResult squarefree_test_const(const CurvePoly& f) {
  if (!is_constant_in_x(f)) throw PreconditionViolated("squarefree test needs constant coefficients");
  if (!f.is_free_of(Var::Lambda)) throw PreconditionViolated("squarefree test expects a polynomial in mu and gamma");
  if (f.is_zero()) throw PreconditionViolated("squarefree test of the zero polynomial");

  const GammaPoly g = to_gamma_poly(f);
  UPoly content;
  for (const auto& c : g.coefficients()) content = gcd(content, c.numerator());

  CurvePoly certificate(1);
  bool repeated = false;
  if (content.degree() > 0) {
    for (const auto& [factor, mult] : squarefree_decomposition(content)) {
      if (mult < 2) continue;
      repeated = true;
      certificate *= from_mu_poly(factor);
    }
  }
  const GammaPoly primitive = g / RationalFunction(content);
  if (primitive.degree() > 0) {
    for (const auto& [factor, mult] : squarefree_decomposition(primitive)) {
      if (mult < 2) continue;
      repeated = true;
      certificate *= primitive_lift(factor);
    }
  }
  if (!repeated) return {true, std::nullopt};
  return {false, certificate};
}

std::string to_string(const CurvePoly& f) {
  return to_string<RationalFunction>(
      f, [](const RationalFunction& c) { return to_string(c); },
      [](const RationalFunction& c) {
        int terms = 0;
        for (const auto& t : c.numerator().coefficients()) terms += t.is_zero() ? 0 : 1;
        return terms == 1;
      });
}

}  // namespace spf
