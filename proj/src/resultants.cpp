#include "spf/resultants.hpp"

namespace spf {

namespace {

void check_pair(const SpectralPair& pair) {
  if (pair.p.order() < 1 || pair.q.order() < 1)
    throw PreconditionViolated("spectral pair operators must have order at least 1");
  if (pair.ind_p == pair.ind_q) throw PreconditionViolated("spectral pair needs two distinct indeterminates");
}

/// Rows d^k(op - ind) for k = top .. 0, written into `m` from row `first`.
void fill_rows(PolyMatrix& m, Eigen::Index first, const DiffOp& op, Var ind, int top) {
  const Eigen::Index width = m.cols();
  std::vector<DiffOp> shifts{op};
  for (int k = 1; k <= top; ++k) shifts.push_back(shift(shifts.back()));
  Eigen::Index row = first;
  for (int k = top; k >= 0; --k, ++row) {
    const DiffOp& s = shifts[static_cast<std::size_t>(k)];
    for (int e = 0; e <= s.order(); ++e) m(row, width - 1 - e) = CurvePoly(s.coeff(e));
    m(row, width - 1 - k) -= CurvePoly::var(ind);
  }
}

PolyMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  PolyMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = CurvePoly();
  return m;
}

PolyMatrix without_column(const PolyMatrix& m, Eigen::Index col) {
  PolyMatrix r(m.rows(), m.cols() - 1);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0, k = 0; j < m.cols(); ++j)
      if (j != col) r(i, k++) = m(i, j);
  return r;
}

}  // namespace

PolyMatrix sylvester_s0(const SpectralPair& pair) {
  check_pair(pair);
  const int n = pair.p.order(), m = pair.q.order();
  PolyMatrix s = zero_matrix(n + m, n + m);
  fill_rows(s, 0, pair.p, pair.ind_p, m - 1);
  fill_rows(s, m, pair.q, pair.ind_q, n - 1);
  return s;
}

CurvePoly diff_resultant(const SpectralPair& pair) {
  CurvePoly r = determinant(sylvester_s0(pair));
  if (!is_constant_in_x(r)) throw NotXFree("differential resultant depends on x: " + to_string(r));
  return r;
}

PolyMatrix sylvester_s1(const SpectralPair& pair) {
  check_pair(pair);
  const int n = pair.p.order(), m = pair.q.order();
  if (n < 2 || m < 2) throw OrderTooSmall("first subresultant needs both orders at least 2");
  PolyMatrix s = zero_matrix(n + m - 2, n + m - 1);
  fill_rows(s, 0, pair.p, pair.ind_p, m - 2);
  fill_rows(s, m - 1, pair.q, pair.ind_q, n - 2);
  return s;
}

Subresultant first_subresultant(const SpectralPair& pair) {
  const PolyMatrix s = sylvester_s1(pair);
  const Eigen::Index last = s.cols() - 1;  // the d^0 column
  return {determinant(without_column(s, last - 1)), determinant(without_column(s, last))};
}

CurvePoly sign_normalized(const CurvePoly& f, Var second) {
  const int k = static_cast<int>(second);
  int best = 0;
  RationalFunction coeff;
  for (const auto& [e, c] : f.terms()) {
    const bool pure = e[k] > 0 && e[0] + e[1] + e[2] == e[k];
    if (pure && e[k] > best) {
      best = e[k];
      coeff = c;
    }
  }
  if (best == 0) return f;
  const bool positive = coeff.numerator().leading() > 0;
  return positive ? -f : f;
}

}  // namespace spf
