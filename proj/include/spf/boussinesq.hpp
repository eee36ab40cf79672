#pragma once

#include "spf/diffop.hpp"
#include "spf/diffpoly.hpp"
#include "spf/ratfunc.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace spf {

/// Potentials of L = d^3 + u1 d + u0 = d^3 + q1 d + q1'/2 + q0, kept in both
/// coordinatizations.
struct Potentials {
  RationalFunction q0, q1, u0, u1;

  static Potentials from_q(const RationalFunction& q0, const RationalFunction& q1);
  static Potentials from_u(const RationalFunction& u0, const RationalFunction& u1);
};

/// The operator L of the given potentials.
DiffOp boussinesq_operator(const Potentials& pot);

/// (f_{n,i}, g_{n,i}) at concrete potentials.
struct BsqLevel {
  int n = 0;
  int i = 1;
  RationalFunction f, g;
};

/// Integration constants; entry j multiplies the zero-constant operator of
/// the j-th order in 1, 2, 4, 5, 7, 8, ...
using ConstVec = std::vector<Rat>;

/// Position of `m` in the sequence 1, 2, 4, 5, ...; throws BadOrder if 3 | m.
int order_index(int m);
/// The j-th element of 1, 2, 4, 5, ...
int order_at(int j);

struct CentralizerBasis {
  DiffOp A1, A2;
  int n1 = 0, n2 = 0;
  ConstVec c1, c2;
};

/// Generic (f_{n,i}, g_{n,i}) as differential polynomials in q0, q1, with the
/// integration constants of the hierarchy's normalization set to zero.
const std::pair<DiffPoly, DiffPoly>& generic_level(int n, int i);

/// The generic right-hand sides 3 f_{n+1}' and 3 g_{n+1}' given (f_n, g_n);
/// at level n these are the components of Bsq_{n,i} with zero constants.
std::pair<DiffPoly, DiffPoly> generic_bsq(int n, int i);

/// Hierarchy data at fixed potentials, computed lazily and cached.
class Hierarchy {
public:
  explicit Hierarchy(Potentials pot);

  const Potentials& potentials() const { return pot_; }
  const DiffOp& L() const { return l_; }

  const BsqLevel& level(int n, int i);
  /// L_{n,i}.
  DiffOp level_operator(int n, int i);
  /// P_m with all constants zero.
  const DiffOp& base_operator(int m);
  /// Bsq_{n,i} with all constants zero.
  const std::pair<RationalFunction, RationalFunction>& base_residual(int n, int i);

  DiffOp assemble(int m, const ConstVec& c);
  std::pair<RationalFunction, RationalFunction> residual(int n, int i, const ConstVec& c);
  std::optional<ConstVec> solve(int n, int i);

private:
  Potentials pot_;
  DiffOp l_;
  PotentialJets jets_;
  std::map<std::pair<int, int>, BsqLevel> levels_;
  std::map<int, DiffOp> base_ops_;
  std::map<std::pair<int, int>, std::pair<RationalFunction, RationalFunction>> base_res_;
};

/// Levels 0..n_max of both branches.
std::map<std::pair<int, int>, BsqLevel> bsq_recursion(const Potentials& pot, int n_max);

/// P_m(c) = P_m^0 + sum_j c_j P_{m_j}^0. Missing trailing constants count as zero.
DiffOp assemble_P(int m, const Potentials& pot, const ConstVec& c = {});

/// Bsq_{n,i}(pot, c); (0, 0) iff the stationary system holds.
std::pair<RationalFunction, RationalFunction> bsq_residual(int n, int i, const Potentials& pot,
                                                           const ConstVec& c = {});

/// Constants c of length 2n+i-1 making Bsq_{n,i} vanish, free coordinates
/// zero; nullopt if none exist.
std::optional<ConstVec> solve_constants(int n, int i, const Potentials& pot);

/// A commuting hierarchy operator of one branch.
struct BranchOperator {
  DiffOp op;
  int n = 0;
  ConstVec c;
};

/// The first level in [n_lo, n_hi] of branch i whose stationary system is
/// solvable and whose operator commutes with L.
std::optional<BranchOperator> branch_operator(Hierarchy& h, int i, int n_lo, int n_hi);

/// Least levels n1, n2 <= n_cap whose stationary systems are solvable, with
/// the resulting operators A1 = P_{3n1+1}, A2 = P_{3n2+2}.
CentralizerBasis centralizer_basis(const Potentials& pot, int n_cap = 5);
CentralizerBasis centralizer_basis(Hierarchy& h, int n_cap = 5);

}  // namespace spf
