#pragma once

#include "spf/errors.hpp"
#include "spf/mpoly.hpp"
#include "spf/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace spf {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Exact division and pivot preference for the integral domains the
/// fraction-free kernels run over. Fields divide directly.
template <class T>
struct ExactDomain {
  static T divide(const T& a, const T& b) { return a / b; }
  static std::size_t cost(const T&) { return 0; }
};

template <class C>
struct ExactDomain<MPoly3<C>> {
  static MPoly3<C> divide(const MPoly3<C>& a, const MPoly3<C>& b) {
    if (b.size() == 1 && b.total_degree() == 0 && is_one(b.leading().second)) return a;
    return exact_div(a, b);
  }
  // Prefer low-degree, short pivots; constants first.
  static std::size_t cost(const MPoly3<C>& p) {
    return static_cast<std::size_t>(p.total_degree()) * 4096 + p.size();
  }
};

/// Fraction-free (Bareiss) determinant over an exact integral domain.
/// Row pivoting picks the cheapest nonzero entry of each column.
template <class Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Domain = ExactDomain<Scalar>;
  if (input.rows() != input.cols()) throw NonSquare("determinant of a non-square matrix");
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);

  Matrix<Scalar> m = input;
  Scalar prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = -1;
    std::size_t best_cost = 0;
    for (Eigen::Index i = k; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      const std::size_t c = Domain::cost(m(i, k));
      if (best < 0 || c < best_cost) {
        best = i;
        best_cost = c;
      }
    }
    if (best < 0) return Scalar(0);
    if (best != k) {
      m.row(k).swap(m.row(best));
      negate = !negate;
    }
    const Scalar pivot = m(k, k);
    const bool same_scale = pivot == prev;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const bool lead_zero = is_zero(m(i, k));
      if (lead_zero && same_scale) continue;
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar v = pivot * m(i, j);
        if (!lead_zero && !is_zero(m(k, j))) v = v - m(i, k) * m(k, j);
        m(i, j) = is_zero(v) ? Scalar(0) : Domain::divide(v, prev);
      }
      m(i, k) = Scalar(0);
    }
    prev = pivot;
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Rank of a matrix over a field by Gaussian elimination.
template <class F>
int rank(Matrix<F> m) {
  int r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.row(r).swap(m.row(p));
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      const F f = m(i, c) / m(r, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Solves a*x = b over a field. Returns nullopt when inconsistent; free
/// coordinates of an underdetermined system are set to zero, pivots are
/// taken left to right.
template <class F>
std::optional<Vector<F>> solve_linear(Matrix<F> a, Vector<F> b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!is_zero(a(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    a.row(r).swap(a.row(p));
    std::swap(b(r), b(p));
    const F inv = F(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    b(r) = b(r) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const F f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
      b(i) = b(i) - f * b(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i)
    if (!is_zero(b(i))) return std::nullopt;
  Vector<F> x(cols);
  for (Eigen::Index j = 0; j < cols; ++j) x(j) = F(0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x(pivot_cols[i]) = b(static_cast<Eigen::Index>(i));
  return x;
}

}  // namespace spf
