#include "spf/boussinesq.hpp"

#include "spf/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace spf {

namespace {

DiffPoly q0(int k = 0) { return DiffPoly::var(Potential::Q0, k); }
DiffPoly q1(int k = 0) { return DiffPoly::var(Potential::Q1, k); }

std::pair<DiffPoly, DiffPoly> rhs(const DiffPoly& f, const DiffPoly& g) {
  const DiffPoly g1 = derive(g), f1 = derive(f);
  const DiffPoly f2 = derive(f1), f3 = derive(f2);
  DiffPoly rf = Rat(2) * derive(g1, 2) + Rat(2) * (q1() * g1) + q1(1) * g + Rat(3) * (q0() * f1) +
                Rat(2) * (q0(1) * f);
  DiffPoly rg = Rat(3) * (q0() * g1) + q0(1) * g - Rat(1, 6) * derive(f3, 2) - Rat(5, 6) * (q1() * f3) -
                Rat(5, 4) * (q1(1) * f2) - (Rat(3, 4) * q1(2) + Rat(2, 3) * (q1() * q1())) * f1 -
                (Rat(1, 6) * q1(3) + Rat(2, 3) * (q1() * q1(1))) * f;
  return {std::move(rf), std::move(rg)};
}

std::string where(int n, int i) { return " (level " + std::to_string(n) + ", branch " + std::to_string(i) + ")"; }

void check_branch(int n, int i) {
  if (i != 1 && i != 2) throw PreconditionViolated("branch must be 1 or 2");
  if (n < 0) throw PreconditionViolated("level must be nonnegative");
}

/// Coefficient vector of a polynomial padded to `size`.
std::vector<Rat> padded(const UPoly& p, std::size_t size) {
  std::vector<Rat> v(size, Rat(0));
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) v[k] = p.coefficients()[k];
  return v;
}

}  // namespace

Potentials Potentials::from_q(const RationalFunction& q0, const RationalFunction& q1) {
  return {q0, q1, Rat(1, 2) * derive(q1) + q0, q1};
}

Potentials Potentials::from_u(const RationalFunction& u0, const RationalFunction& u1) {
  return {u0 - Rat(1, 2) * derive(u1), u1, u0, u1};
}

DiffOp boussinesq_operator(const Potentials& pot) { return DiffOp(std::vector<RationalFunction>{pot.u0, pot.u1, 0, 1}); }

int order_index(int m) {
  if (m <= 0 || m % 3 == 0) throw BadOrder("no hierarchy operator of order " + std::to_string(m));
  return 2 * (m / 3) + m % 3 - 1;
}

int order_at(int j) { return 3 * (j / 2) + j % 2 + 1; }

const std::pair<DiffPoly, DiffPoly>& generic_level(int n, int i) {
  check_branch(n, i);
  static std::mutex mutex;
  static std::vector<std::pair<DiffPoly, DiffPoly>> branch[2] = {{{DiffPoly(0), DiffPoly(1)}},
                                                                 {{DiffPoly(1), DiffPoly(0)}}};
  std::lock_guard lock(mutex);
  auto& levels = branch[i - 1];
  while (static_cast<int>(levels.size()) <= n) {
    const int k = static_cast<int>(levels.size());
    auto [rf, rg] = rhs(levels.back().first, levels.back().second);
    try {
      levels.emplace_back(Rat(1, 3) * integrate(rf), Rat(1, 3) * integrate(rg));
    } catch (const LogarithmicPart& e) {
      throw LogarithmicPart(e.what() + where(k, i));
    }
  }
  return levels[static_cast<std::size_t>(n)];
}

std::pair<DiffPoly, DiffPoly> generic_bsq(int n, int i) {
  const auto& [f, g] = generic_level(n, i);
  return rhs(f, g);
}

Hierarchy::Hierarchy(Potentials pot)
    : pot_(std::move(pot)), l_(boussinesq_operator(pot_)), jets_(pot_.q0, pot_.q1) {}

const BsqLevel& Hierarchy::level(int n, int i) {
  check_branch(n, i);
  auto key = std::make_pair(n, i);
  auto it = levels_.find(key);
  if (it != levels_.end()) return it->second;
  const auto& [f, g] = generic_level(n, i);
  return levels_.emplace(key, BsqLevel{n, i, evaluate(f, jets_), evaluate(g, jets_)}).first->second;
}

DiffOp Hierarchy::level_operator(int n, int i) {
  const BsqLevel& lv = level(n, i);
  const RationalFunction f1 = derive(lv.f);
  return DiffOp(std::vector<RationalFunction>{Rat(1, 6) * derive(f1) - derive(lv.g) + Rat(2, 3) * pot_.q1 * lv.f,
                 lv.g - Rat(1, 2) * f1, lv.f});
}

const DiffOp& Hierarchy::base_operator(int m) {
  order_index(m);
  auto it = base_ops_.find(m);
  if (it != base_ops_.end()) return it->second;
  const int n = m / 3, i = m % 3;
  DiffOp p = n == 0 ? level_operator(0, i) : compose(base_operator(m - 3), l_) + level_operator(n, i);
  return base_ops_.emplace(m, std::move(p)).first->second;
}

const std::pair<RationalFunction, RationalFunction>& Hierarchy::base_residual(int n, int i) {
  check_branch(n, i);
  auto key = std::make_pair(n, i);
  auto it = base_res_.find(key);
  if (it != base_res_.end()) return it->second;
  auto [rf, rg] = generic_bsq(n, i);
  return base_res_.emplace(key, std::make_pair(evaluate(rf, jets_), evaluate(rg, jets_))).first->second;
}

DiffOp Hierarchy::assemble(int m, const ConstVec& c) {
  const int top = order_index(m);
  if (static_cast<int>(c.size()) > top)
    throw PreconditionViolated("too many constants for order " + std::to_string(m));
  DiffOp p = base_operator(m);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!c[j].is_zero()) p += scale(base_operator(order_at(static_cast<int>(j))), c[j]);
  return p;
}

std::pair<RationalFunction, RationalFunction> Hierarchy::residual(int n, int i, const ConstVec& c) {
  const int top = order_index(3 * n + i);
  if (static_cast<int>(c.size()) > top)
    throw PreconditionViolated("too many constants for level " + std::to_string(n));
  auto r = base_residual(n, i);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    const int mj = order_at(static_cast<int>(j));
    const auto& b = base_residual(mj / 3, mj % 3);
    r.first += c[j] * b.first;
    r.second += c[j] * b.second;
  }
  return r;
}

std::optional<ConstVec> Hierarchy::solve(int n, int i) {
  const int unknowns = order_index(3 * n + i);
  std::vector<std::pair<RationalFunction, RationalFunction>> cols;
  for (int j = 0; j < unknowns; ++j) {
    const int mj = order_at(j);
    cols.push_back(base_residual(mj / 3, mj % 3));
  }
  const auto& r0 = base_residual(n, i);

  // For each component clear denominators and match powers of x.
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs_vals;
  for (int comp = 0; comp < 2; ++comp) {
    auto pick = [comp](const std::pair<RationalFunction, RationalFunction>& p) -> const RationalFunction& {
      return comp == 0 ? p.first : p.second;
    };
    UPoly den = pick(r0).denominator();
    for (const auto& col : cols) {
      const UPoly& d = pick(col).denominator();
      den = exact_quotient(den * d, gcd(den, d));
    }
    auto cleared = [&](const RationalFunction& f) {
      return f.numerator() * exact_quotient(den, f.denominator());
    };
    std::vector<UPoly> nums;
    std::size_t size = 0;
    for (const auto& col : cols) {
      nums.push_back(cleared(pick(col)));
      size = std::max(size, nums.back().coefficients().size());
    }
    const UPoly target = -cleared(pick(r0));
    size = std::max(size, target.coefficients().size());
    std::vector<std::vector<Rat>> coeffs;
    for (const auto& p : nums) coeffs.push_back(padded(p, size));
    const std::vector<Rat> t = padded(target, size);
    for (std::size_t k = 0; k < size; ++k) {
      std::vector<Rat> row;
      for (const auto& cv : coeffs) row.push_back(cv[k]);
      rows.push_back(std::move(row));
      rhs_vals.push_back(t[k]);
    }
  }

  if (unknowns == 0) {
    for (const auto& v : rhs_vals)
      if (!v.is_zero()) return std::nullopt;
    return ConstVec{};
  }
  Matrix<Rat> a(static_cast<Eigen::Index>(rows.size()), unknowns);
  Vector<Rat> b(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int j = 0; j < unknowns; ++j) a(static_cast<Eigen::Index>(r), j) = rows[r][static_cast<std::size_t>(j)];
    b(static_cast<Eigen::Index>(r)) = rhs_vals[r];
  }
  auto x = solve_linear<Rat>(std::move(a), std::move(b));
  if (!x) return std::nullopt;
  return ConstVec(x->data(), x->data() + x->size());
}

std::map<std::pair<int, int>, BsqLevel> bsq_recursion(const Potentials& pot, int n_max) {
  Hierarchy h(pot);
  std::map<std::pair<int, int>, BsqLevel> out;
  for (int n = 0; n <= n_max; ++n)
    for (int i = 1; i <= 2; ++i) out.emplace(std::make_pair(n, i), h.level(n, i));
  return out;
}

DiffOp assemble_P(int m, const Potentials& pot, const ConstVec& c) {
  Hierarchy h(pot);
  return h.assemble(m, c);
}

std::pair<RationalFunction, RationalFunction> bsq_residual(int n, int i, const Potentials& pot, const ConstVec& c) {
  Hierarchy h(pot);
  return h.residual(n, i, c);
}

std::optional<ConstVec> solve_constants(int n, int i, const Potentials& pot) {
  Hierarchy h(pot);
  return h.solve(n, i);
}

std::optional<BranchOperator> branch_operator(Hierarchy& h, int i, int n_lo, int n_hi) {
  check_branch(std::max(n_lo, 0), i);
  for (int n = std::max(n_lo, 0); n <= n_hi; ++n) {
    auto c = h.solve(n, i);
    if (!c) continue;
    DiffOp a = h.assemble(3 * n + i, *c);
    if (!commutator(a, h.L()).is_zero()) continue;
    return BranchOperator{std::move(a), n, std::move(*c)};
  }
  return std::nullopt;
}

CentralizerBasis centralizer_basis(Hierarchy& h, int n_cap) {
  CentralizerBasis basis;
  for (int i = 1; i <= 2; ++i) {
    auto found = branch_operator(h, i, 0, n_cap);
    if (!found)
      throw NoCentralizerFound("no commuting operator in branch " + std::to_string(i) + " up to level " +
                               std::to_string(n_cap));
    (i == 1 ? basis.A1 : basis.A2) = std::move(found->op);
    (i == 1 ? basis.n1 : basis.n2) = found->n;
    (i == 1 ? basis.c1 : basis.c2) = std::move(found->c);
  }
  return basis;
}

CentralizerBasis centralizer_basis(const Potentials& pot, int n_cap) {
  Hierarchy h(pot);
  return centralizer_basis(h, n_cap);
}

}  // namespace spf
