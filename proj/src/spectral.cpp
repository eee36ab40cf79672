#include "spf/spectral.hpp"

#include <algorithm>
#include <numeric>

namespace spf {

namespace {

/// Positive divisors of a nonzero integer by trial division.
std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, int>> primes;
  for (Integer d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) primes.emplace_back(d, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

/// f(lambda0, t) or f(t, ...) as a polynomial in the single remaining
/// indeterminate `v`, the others fixed by `p`.
UPoly restrict_to(const CurvePoly& f, Var v, const Point3& p) {
  UPoly r;
  const int k = static_cast<int>(v);
  for (const auto& [e, c] : f.terms()) {
    Rat m = c.constant_value();
    for (int j = 0; j < 3; ++j) {
      if (j == k) continue;
      for (int t = 0; t < e[j]; ++t) m *= p[static_cast<std::size_t>(j)];
    }
    r += UPoly::monomial(m, e[k]);
  }
  return r;
}

bool vanishes(const CurvePoly& f, const Point3& p) { return eval_point(f, p).is_zero(); }

Point3 evaluate_param(const Parametrization& param, const Rat& tau0) {
  Point3 p{Rat(0), Rat(0), Rat(0)};
  for (std::size_t k = 0; k < param.components.size() && k < 3; ++k) p[k] = param.components[k](tau0);
  return p;
}

RationalFunction subresultant_ratio(const Subresultant& s, const Point3& p) {
  const RationalFunction den = eval_point(s.phi1, p);
  if (den.is_zero()) throw ZeroDenominator("first subresultant degenerates at the point");
  return eval_point(s.phi0, p) / den;
}

DiffOp right_factor_of(const RationalFunction& phi0) { return DiffOp(std::vector<RationalFunction>{phi0, 1}); }

void check_common(VerificationReport& r, const DiffOp& l, const Rat& lambda0, const RationalFunction& phi0,
                  const DiffOp& a1, const Rat& mu0) {
  const DiffOp target = l - DiffOp(RationalFunction(lambda0));
  const DiffOp right = right_factor_of(phi0);
  const DiffOp cofactor = spectral_cofactor(phi0, l.coeff(1));
  r.cofactor_identity = compose(cofactor, right) == target;
  auto [q, rem] = right_divmod(target, right);
  r.division_exact = rem.is_zero() && q == cofactor;
  r.divides_a1 = right_divmod(a1 - DiffOp(RationalFunction(mu0)), right).second.is_zero();
}

FactorizationResult factor_at(const DiffOp& l, const CurvePoint& point, const RationalFunction& phi0) {
  FactorizationResult out;
  out.point = point;
  out.phi0 = phi0;
  out.right_factor = right_factor_of(phi0);
  out.quotient = right_divmod(l - DiffOp(RationalFunction(point.lambda0)), out.right_factor).first;
  return out;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NotPrime: return "NotPrime";
    case Verdict::HeuristicallyPrime: return "HeuristicallyPrime";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Factored: return "Factored";
    case Outcome::NotGeometricallyReducible: return "NotGeometricallyReducible";
    case Outcome::InZ: return "InZ";
    case Outcome::NoRationalPoint: return "NoRationalPoint";
    case Outcome::NoCentralizer: return "NoCentralizer";
  }
  return "?";
}

std::array<SpectralPair, 3> spectral_pairs(const DiffOp& l, const CentralizerBasis& basis) {
  return {SpectralPair{l, basis.A1, Var::Lambda, Var::Mu}, SpectralPair{l, basis.A2, Var::Lambda, Var::Gamma},
          SpectralPair{basis.A1, basis.A2, Var::Mu, Var::Gamma}};
}

SpectralCurve spectral_curve(const DiffOp& l, const CentralizerBasis& basis) {
  const auto pairs = spectral_pairs(l, basis);
  SpectralCurve c;
  c.raw1 = diff_resultant(pairs[0]);
  c.raw2 = diff_resultant(pairs[1]);
  c.raw3 = diff_resultant(pairs[2]);
  c.f1 = sign_normalized(c.raw1, Var::Mu);
  c.f2 = sign_normalized(c.raw2, Var::Gamma);
  c.f3 = sign_normalized(c.raw3, Var::Gamma);
  c.orders = {l.order(), basis.A1.order(), basis.A2.order()};
  const SquarefreeResult sq = squarefree_test_const(c.f3);
  if (!sq.squarefree) {
    c.verdict = Verdict::NotPrime;
    c.certificate = sq.certificate;
  } else if (std::gcd(c.orders[1], c.orders[2]) == 1) {
    c.verdict = Verdict::HeuristicallyPrime;
  } else {
    c.verdict = Verdict::Undetermined;
  }
  return c;
}

CurvePoint point_from_tau(const Parametrization& param, const Rat& tau0, const SpectralCurve& curve) {
  if (param.components.size() != 3) throw PreconditionViolated("a space-curve parametrization has three components");
  const Point3 p = evaluate_param(param, tau0);
  for (const CurvePoly* f : {&curve.f1, &curve.f2, &curve.f3})
    if (!vanishes(*f, p))
      throw NotOnCurve("parametrization at tau0 = " + to_string(tau0) + " misses " + to_string(*f));
  return {p[0], p[1], p[2]};
}

CurvePoint point_from_tau(const Parametrization& param, const Rat& tau0, const CurvePoly& f1) {
  if (param.components.size() != 2) throw PreconditionViolated("a planar parametrization has two components");
  const Point3 p = evaluate_param(param, tau0);
  if (!vanishes(f1, p)) throw NotOnCurve("parametrization at tau0 = " + to_string(tau0) + " misses " + to_string(f1));
  return {p[0], p[1], std::nullopt};
}

std::vector<Rat> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("rational roots of the zero polynomial");
  Integer common = 1;
  for (const auto& c : p.coefficients()) common = boost::multiprecision::lcm(common, den(c));
  std::vector<Integer> z;
  for (const auto& c : p.coefficients()) z.push_back(num(c * Rat(common)));
  std::vector<Rat> roots;
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (z.size() - low > 1) {
    const auto ps = divisors(z[low]);
    const auto qs = divisors(z.back());
    for (const auto& a : ps)
      for (const auto& b : qs)
        for (int s : {1, -1}) {
          const Rat r = Rat(a * s) / Rat(b);
          if (p(r).is_zero()) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

LambdaSearch point_from_lambda(const SpectralCurve& curve, const Rat& lambda0) {
  LambdaSearch out;
  const Point3 base{lambda0, Rat(0), Rat(0)};
  const UPoly in_mu = restrict_to(curve.f1, Var::Mu, base);
  const UPoly in_gamma = restrict_to(curve.f2, Var::Gamma, base);
  if (in_mu.is_zero() || in_gamma.is_zero()) return out;
  for (const Rat& mu : rational_roots(in_mu))
    for (const Rat& gamma : rational_roots(in_gamma))
      if (vanishes(curve.f3, {lambda0, mu, gamma})) out.candidates.push_back({lambda0, mu, gamma});
  if (!out.candidates.empty()) out.point = out.candidates.front();
  return out;
}

ZMembership z_membership(const CurvePoint& p0, const SpectralCurve& curve, const std::array<Subresultant, 3>& subres) {
  ZMembership z;
  const Point3 p = p0.coords();
  Matrix<Rat> jac(3, 3);
  const std::array<const CurvePoly*, 3> fs{&curve.f1, &curve.f2, &curve.f3};
  for (int i = 0; i < 3; ++i) {
    const auto row = jacobian_row(*fs[static_cast<std::size_t>(i)]);
    for (int j = 0; j < 3; ++j) jac(i, j) = eval_point(row[static_cast<std::size_t>(j)], p).constant_value();
  }
  if (rank(jac) < 2) z.reasons.push_back("singular point of the curve (Jacobian rank < 2)");
  for (std::size_t i = 0; i < 3; ++i)
    if (eval_point(subres[i].phi1, p).is_zero())
      z.reasons.push_back("phi_{" + std::to_string(i + 1) + ",1} vanishes at the point");
  z.in_z = !z.reasons.empty();
  return z;
}

DiffOp spectral_cofactor(const RationalFunction& phi0, const RationalFunction& u1) {
  return DiffOp(std::vector<RationalFunction>{phi0 * phi0 - Rat(2) * derive(phi0) + u1, -phi0, 1});
}

VerificationReport verify_spectral_factorization(const DiffOp& l, const Potentials& pot, const CurvePoint& point,
                                                 const RationalFunction& phi0, const CentralizerBasis& basis) {
  VerificationReport r;
  if (l != boussinesq_operator(pot)) return r;
  check_common(r, l, point.lambda0, phi0, basis.A1, point.mu0);
  const Rat gamma0 = point.gamma0.value_or(Rat(0));
  r.divides_a2 = right_divmod(basis.A2 - DiffOp(RationalFunction(gamma0)), right_factor_of(phi0)).second.is_zero();
  r.ratios_agree = true;
  for (const auto& pair : spectral_pairs(l, basis)) {
    const Subresultant s = first_subresultant(pair);
    const RationalFunction den = eval_point(s.phi1, point.coords());
    if (den.is_zero() || eval_point(s.phi0, point.coords()) / den != phi0) r.ratios_agree = false;
  }
  return r;
}

VerificationReport verify_planar_factorization(const DiffOp& l, const CurvePoint& point, const RationalFunction& phi0,
                                               const DiffOp& a1) {
  VerificationReport r;
  check_common(r, l, point.lambda0, phi0, a1, point.mu0);
  const Subresultant s = first_subresultant({l, a1, Var::Lambda, Var::Mu});
  const RationalFunction den = eval_point(s.phi1, point.coords());
  r.ratios_agree = !den.is_zero() && eval_point(s.phi0, point.coords()) / den == phi0;
  return r;
}

SpfOutcome spectral_factorization(const Potentials& pot, const SpfTarget& target, int n_cap) {
  SpfOutcome out;
  Hierarchy h(pot);
  try {
    out.basis = centralizer_basis(h, n_cap);
  } catch (const NoCentralizerFound& e) {
    out.outcome = Outcome::NoCentralizer;
    out.diagnostic = e.what();
    return out;
  }
  const DiffOp& l = h.L();
  out.curve = spectral_curve(l, *out.basis);
  if (out.curve->verdict == Verdict::NotPrime) {
    out.outcome = Outcome::NotGeometricallyReducible;
    out.diagnostic = kNotGeometricallyReducible;
    return out;
  }

  const auto pairs = spectral_pairs(l, *out.basis);
  const std::array<Subresultant, 3> subres{first_subresultant(pairs[0]), first_subresultant(pairs[1]),
                                           first_subresultant(pairs[2])};

  if (target.param && target.tau0) {
    out.point = point_from_tau(*target.param, *target.tau0, *out.curve);
  } else if (target.lambda0) {
    LambdaSearch search = point_from_lambda(*out.curve, *target.lambda0);
    out.candidates = std::move(search.candidates);
    out.point = search.point;
  } else {
    throw PreconditionViolated("a target needs lambda0 or a parametrization with tau0");
  }
  if (!out.point) {
    out.outcome = Outcome::NoRationalPoint;
    out.diagnostic = kNoRationalPoint;
    return out;
  }

  out.z = z_membership(*out.point, *out.curve, subres);
  if (out.z->in_z) {
    out.outcome = Outcome::InZ;
    out.diagnostic = kCannotFactor;
    return out;
  }

  FactorizationResult res = factor_at(l, *out.point, subresultant_ratio(subres[0], out.point->coords()));
  res.ideal = out.curve;
  res.checks = verify_spectral_factorization(l, pot, *out.point, res.phi0, *out.basis);
  res.verified = res.checks.all();
  out.result = std::move(res);
  out.outcome = Outcome::Factored;
  return out;
}

FactorizationResult planar_factor(const DiffOp& l, const DiffOp& a1, const CurvePoint& point) {
  if (!commutator(a1, l).is_zero()) throw PreconditionViolated("A1 does not commute with L");
  const SpectralPair pair{l, a1, Var::Lambda, Var::Mu};
  const CurvePoly f1 = sign_normalized(diff_resultant(pair), Var::Mu);
  if (!vanishes(f1, point.coords())) throw NotOnCurve("point is not on f1 = " + to_string(f1));
  CurvePoint p = point;
  p.gamma0.reset();
  FactorizationResult res = factor_at(l, p, subresultant_ratio(first_subresultant(pair), p.coords()));
  res.checks = verify_planar_factorization(l, p, res.phi0, a1);
  res.verified = res.checks.all();
  return res;
}

FactorizationResult planar_factor(const DiffOp& l, const DiffOp& a1, const Parametrization& param, const Rat& tau0) {
  const CurvePoly f1 = sign_normalized(diff_resultant({l, a1, Var::Lambda, Var::Mu}), Var::Mu);
  return planar_factor(l, a1, point_from_tau(param, tau0, f1));
}

}  // namespace spf
