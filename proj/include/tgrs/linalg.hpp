#pragma once

// Exact dense linear algebra over a field scalar.
//
// Everything here is templated on the Eigen expression type; the scalar only
// needs ring operators, division, and `==`. Pivoting takes the first nonzero
// entry in the column, which is all exact arithmetic needs.

#include <algorithm>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tgrs/errors.hpp"
#include "tgrs/gf.hpp"

namespace tgrs {

using Index = Eigen::Index;

template <typename Scalar> using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar> using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatGF = Matrix<GF>;
using VecGF = Vector<GF>;

template <typename Scalar> struct Echelon
{
  Matrix<Scalar>     reduced; // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

namespace detail {

template <typename Scalar> auto is_zero(Scalar const &x) -> bool { return x == Scalar(0); }

// In-place elimination to reduced row echelon form. Returns pivot columns.
template <typename Scalar> auto eliminate(Matrix<Scalar> &a) -> std::vector<Index>
{
  std::vector<Index> pivots;
  Index              row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index piv = row;
    while (piv < a.rows() && is_zero(a(piv, col))) { ++piv; }
    if (piv == a.rows()) { continue; }
    if (piv != row) { a.row(piv).swap(a.row(row)); }
    Scalar const inv = Scalar(1) / a(row, col);
    for (Index j = col; j < a.cols(); ++j) { a(row, j) *= inv; }
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) { continue; }
      Scalar const f = a(i, col);
      for (Index j = col; j < a.cols(); ++j) { a(i, j) -= f * a(row, j); }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace detail

template <typename Derived> auto rref(Eigen::MatrixBase<Derived> const &m) -> Echelon<typename Derived::Scalar>
{
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out{m.eval(), {}};
  out.pivots = detail::eliminate(out.reduced);
  return out;
}

template <typename Derived> auto rank(Eigen::MatrixBase<Derived> const &m) -> Index
{
  using Scalar      = typename Derived::Scalar;
  Matrix<Scalar> a  = m;
  return static_cast<Index>(detail::eliminate(a).size());
}

template <typename Derived> auto det(Eigen::MatrixBase<Derived> const &m) -> typename Derived::Scalar
{
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw UsageError("det of non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  Matrix<Scalar> a   = m;
  Scalar         acc = Scalar(1);
  Index const    n   = a.rows();
  for (Index col = 0; col < n; ++col) {
    Index piv = col;
    while (piv < n && detail::is_zero(a(piv, col))) { ++piv; }
    if (piv == n) { return acc * Scalar(0); }
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      acc = -acc;
    }
    acc *= a(col, col);
    Scalar const inv = Scalar(1) / a(col, col);
    for (Index i = col + 1; i < n; ++i) {
      if (detail::is_zero(a(i, col))) { continue; }
      Scalar const f = a(i, col) * inv;
      for (Index j = col; j < n; ++j) { a(i, j) -= f * a(col, j); }
    }
  }
  return acc;
}

// Rows form a basis of {x : m x^T = 0}; cols(m) - rank(m) rows.
template <typename Derived> auto null_space(Eigen::MatrixBase<Derived> const &m) -> Matrix<typename Derived::Scalar>
{
  using Scalar   = typename Derived::Scalar;
  auto const ech = rref(m);
  Index const n  = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : ech.pivots) { is_pivot[static_cast<std::size_t>(c)] = true; }

  Matrix<Scalar> basis(n - static_cast<Index>(ech.pivots.size()), n);
  basis.setZero();
  Index row = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) { continue; }
    basis(row, f) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      basis(row, ech.pivots[r]) = -ech.reduced(static_cast<Index>(r), f);
    }
    ++row;
  }
  return basis;
}

// Unique x with a x = b for square invertible a; DomainError when singular.
template <typename DerivedA, typename DerivedB>
auto solve(Eigen::MatrixBase<DerivedA> const &a, Eigen::MatrixBase<DerivedB> const &b) -> Vector<typename DerivedA::Scalar>
{
  using Scalar = typename DerivedA::Scalar;
  Index const n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != 1) { throw UsageError("solve: shape mismatch"); }
  if (n == 0) { return Vector<Scalar>(0); }
  Matrix<Scalar> aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n)      = b;
  auto const piv  = detail::eliminate(aug);
  if (static_cast<Index>(piv.size()) < n || piv.back() != n - 1) { throw DomainError("solve: matrix is singular"); }
  return aug.col(n);
}

template <typename Derived> auto inverse(Eigen::MatrixBase<Derived> const &a) -> Matrix<typename Derived::Scalar>
{
  using Scalar  = typename Derived::Scalar;
  Index const n = a.rows();
  if (a.cols() != n) { throw UsageError("inverse of non-square matrix"); }
  Matrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n).setZero();
  for (Index i = 0; i < n; ++i) { aug(i, n + i) = Scalar(1); }
  auto const piv = detail::eliminate(aug);
  if (static_cast<Index>(piv.size()) < n || (n > 0 && piv[static_cast<std::size_t>(n - 1)] != n - 1)) {
    throw DomainError("inverse: matrix is singular");
  }
  return aug.rightCols(n);
}

template <typename DerivedA, typename DerivedB>
auto vstack(Eigen::MatrixBase<DerivedA> const &a, Eigen::MatrixBase<DerivedB> const &b) -> Matrix<typename DerivedA::Scalar>
{
  if (a.cols() != b.cols()) { throw UsageError("vstack: column counts differ"); }
  Matrix<typename DerivedA::Scalar> out(a.rows() + b.rows(), a.cols());
  out << a, b;
  return out;
}

template <typename Derived>
auto select_columns(Eigen::MatrixBase<Derived> const &m, std::vector<Index> const &cols) -> Matrix<typename Derived::Scalar>
{
  Matrix<typename Derived::Scalar> out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] < 0 || cols[j] >= m.cols()) { throw UsageError("column index out of range"); }
    out.col(static_cast<Index>(j)) = m.col(cols[j]);
  }
  return out;
}

template <typename Derived> auto is_zero_matrix(Eigen::MatrixBase<Derived> const &m) -> bool
{
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!detail::is_zero(m(i, j))) { return false; }
    }
  }
  return true;
}

// rank(a) = rank(b) = rank(a stacked on b).
template <typename DerivedA, typename DerivedB>
auto row_spaces_equal(Eigen::MatrixBase<DerivedA> const &a, Eigen::MatrixBase<DerivedB> const &b) -> bool
{
  auto const ra = rank(a);
  return ra == rank(b) && ra == rank(vstack(a, b));
}

// rows x n matrix with entry (i, j) = points[j]^i.
template <typename Scalar> auto vandermonde(std::vector<Scalar> const &points, Index rows) -> Matrix<Scalar>
{
  Index const    n = static_cast<Index>(points.size());
  Matrix<Scalar> v(rows, n);
  for (Index j = 0; j < n; ++j) {
    Scalar p = Scalar(1);
    for (Index i = 0; i < rows; ++i) {
      v(i, j) = p;
      p *= points[static_cast<std::size_t>(j)];
    }
  }
  return v;
}

// The unique w with V w = e_{r+1}, V the square Vandermonde on `points`,
// solved by elimination.
template <typename Scalar> auto solve_vandermonde(std::vector<Scalar> const &points, Index target) -> Vector<Scalar>
{
  Index const n = static_cast<Index>(points.size());
  if (target < 0 || target >= n) { throw UsageError("solve_vandermonde: unit index out of range"); }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw DomainError("singular Vandermonde system: points " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1) + " coincide");
      }
    }
  }
  Vector<Scalar> e = Vector<Scalar>::Zero(n);
  e(target)        = Scalar(1);
  return solve(vandermonde(points, n), e);
}

// det(a + u v^T) = det(a) (1 + v^T a^{-1} u). DomainError when a is singular.
template <typename DerivedA, typename DerivedU, typename DerivedV>
auto det_rank_one_update(Eigen::MatrixBase<DerivedA> const &a,
                         Eigen::MatrixBase<DerivedU> const &u,
                         Eigen::MatrixBase<DerivedV> const &v) -> typename DerivedA::Scalar
{
  using Scalar  = typename DerivedA::Scalar;
  Index const n = a.rows();
  if (a.cols() != n || u.size() != n || v.size() != n) { throw UsageError("det_rank_one_update: shape mismatch"); }
  Scalar const d = det(a);
  if (detail::is_zero(d)) { throw DomainError("det_rank_one_update: A is singular"); }
  Vector<Scalar> const x   = solve(a, u.derived().reshaped(n, 1));
  Scalar               dot = Scalar(0);
  for (Index i = 0; i < n; ++i) { dot += v(i) * x(i); }
  return d * (Scalar(1) + dot);
}

} // namespace tgrs
