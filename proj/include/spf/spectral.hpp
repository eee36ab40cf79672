#pragma once

#include "spf/boussinesq.hpp"
#include "spf/resultants.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace spf {

enum class Verdict { NotPrime, HeuristicallyPrime, Undetermined };

const char* verdict_name(Verdict v);

/// The ideal (f1, f2, f3) of the spectral curve.
struct SpectralCurve {
  /// Sign-normalized generators.
  CurvePoly f1, f2, f3;
  /// Determinants exactly as computed.
  CurvePoly raw1, raw2, raw3;
  std::array<int, 3> orders{3, 0, 0};
  Verdict verdict = Verdict::Undetermined;
  std::optional<CurvePoly> certificate;
};

struct CurvePoint {
  Rat lambda0, mu0;
  /// Absent for points of the planar curve f1 = 0.
  std::optional<Rat> gamma0;

  Point3 coords() const { return {lambda0, mu0, gamma0.value_or(Rat(0))}; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Curve components as polynomials in the parameter t; two entries for a
/// planar curve, three otherwise.
struct Parametrization {
  std::vector<UPoly> components;
};

struct VerificationReport {
  /// (d^2 - phi0 d + phi0^2 - 2 phi0' + u1)(d + phi0) = L - lambda0.
  bool cofactor_identity = false;
  /// The quotient of right division equals that cofactor, remainder zero.
  bool division_exact = false;
  bool divides_a1 = false;
  /// Absent for planar factorizations.
  std::optional<bool> divides_a2;
  /// All available subresultant ratios evaluate to phi0.
  bool ratios_agree = false;

  bool all() const {
    return cofactor_identity && division_exact && divides_a1 && divides_a2.value_or(true) && ratios_agree;
  }
};

struct FactorizationResult {
  std::optional<SpectralCurve> ideal;
  CurvePoint point;
  RationalFunction phi0;
  DiffOp right_factor;
  DiffOp quotient;
  VerificationReport checks;
  bool verified = false;
};

struct ZMembership {
  bool in_z = false;
  std::vector<std::string> reasons;
};

/// The three pairs (L, A1), (L, A2), (A1, A2) with their indeterminates.
std::array<SpectralPair, 3> spectral_pairs(const DiffOp& l, const CentralizerBasis& basis);

SpectralCurve spectral_curve(const DiffOp& l, const CentralizerBasis& basis);

/// Evaluates the parametrization and checks the point on the curve; throws
/// NotOnCurve otherwise.
CurvePoint point_from_tau(const Parametrization& param, const Rat& tau0, const SpectralCurve& curve);
/// Planar version checked against f1 alone.
CurvePoint point_from_tau(const Parametrization& param, const Rat& tau0, const CurvePoly& f1);

struct LambdaSearch {
  std::optional<CurvePoint> point;
  std::vector<CurvePoint> candidates;
};

/// Rational points over lambda0, sorted by (mu0, gamma0) ascending; the first
/// one is selected.
LambdaSearch point_from_lambda(const SpectralCurve& curve, const Rat& lambda0);

/// Rational roots of a nonzero polynomial, ascending, without repetition.
std::vector<Rat> rational_roots(const UPoly& p);

ZMembership z_membership(const CurvePoint& p0, const SpectralCurve& curve, const std::array<Subresultant, 3>& subres);

/// d^2 - phi0 d + phi0^2 - 2 phi0' + u1.
DiffOp spectral_cofactor(const RationalFunction& phi0, const RationalFunction& u1);

VerificationReport verify_spectral_factorization(const DiffOp& l, const Potentials& pot, const CurvePoint& point,
                                                 const RationalFunction& phi0, const CentralizerBasis& basis);
/// Planar variant: only A1 and the (L, A1) pair are available.
VerificationReport verify_planar_factorization(const DiffOp& l, const CurvePoint& point, const RationalFunction& phi0,
                                               const DiffOp& a1);

enum class Outcome { Factored, NotGeometricallyReducible, InZ, NoRationalPoint, NoCentralizer };

const char* outcome_name(Outcome o);

inline constexpr const char* kNotGeometricallyReducible = "L is not geometrically reducible";
inline constexpr const char* kCannotFactor = "a spectral factorization of L-lambda0 cannot be obtained";
inline constexpr const char* kNoRationalPoint = "no rational point; supply a parametrization and τ₀";

/// Either lambda0, or a parametrization with tau0.
struct SpfTarget {
  std::optional<Rat> lambda0;
  std::optional<Parametrization> param;
  std::optional<Rat> tau0;
};

struct SpfOutcome {
  Outcome outcome = Outcome::NoCentralizer;
  std::string diagnostic;
  std::optional<CentralizerBasis> basis;
  std::optional<SpectralCurve> curve;
  std::optional<CurvePoint> point;
  std::vector<CurvePoint> candidates;
  std::optional<ZMembership> z;
  std::optional<FactorizationResult> result;
};

/// The full pipeline: centralizer, curve, primality gate, point, Z gate,
/// phi0, factor, verification.
SpfOutcome spectral_factorization(const Potentials& pot, const SpfTarget& target, int n_cap = 5);

/// Factorization from the (L, A1) pair alone.
FactorizationResult planar_factor(const DiffOp& l, const DiffOp& a1, const CurvePoint& point);
FactorizationResult planar_factor(const DiffOp& l, const DiffOp& a1, const Parametrization& param, const Rat& tau0);

}  // namespace spf
