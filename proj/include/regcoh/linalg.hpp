#ifndef REGCOH_LINALG_HPP
#define REGCOH_LINALG_HPP

#include <optional>
#include <vector>

#include "regcoh/rational.hpp"

namespace regcoh {

namespace detail {

/// Clears denominators row by row; row scaling does not change the rank.
template <typename Derived>
std::vector<std::vector<Int>> integer_rows(const Eigen::MatrixBase<Derived>& m) {
  static_assert(std::is_same_v<typename Derived::Scalar, Rat>);
  std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Int scale = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Rat v = m.derived()(i, j);
      scale = lcm(scale, v.denominator());
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Rat v = m.derived()(i, j);
      rows[i][j] = v.numerator() * (scale / v.denominator());
    }
  }
  return rows;
}

/// Bareiss fraction-free elimination; returns the rank.  All intermediate
/// entries are minors of the input, so divisions are exact.
inline Eigen::Index bareiss_rank(std::vector<std::vector<Int>>& a) {
  const Eigen::Index rows = static_cast<Eigen::Index>(a.size());
  const Eigen::Index cols = rows ? static_cast<Eigen::Index>(a[0].size()) : 0;
  Int prev = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i)
      if (a[i][col] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        Int num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank over the rationals (fraction-free elimination).
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  auto rows = detail::integer_rows(m);
  return detail::bareiss_rank(rows);
}

/// Exact determinant of a square matrix (Gaussian elimination over Q).
template <typename Derived>
Rat determinant(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  RatMatrix a = m;
  const Eigen::Index n = a.rows();
  Rat det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (a(i, col) != Rat(0)) { pivot = i; break; }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      const Rat f = a(i, col) / a(col, col);
      for (Eigen::Index j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

/// Exact inverse of a nonsingular square matrix (Gauss-Jordan).
template <typename Derived>
RatMatrix inverse(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const Eigen::Index n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (a(i, col) != Rat(0)) { pivot = i; break; }
    if (pivot < 0) throw std::invalid_argument("inverse: singular matrix");
    a.row(pivot).swap(a.row(col));
    inv.row(pivot).swap(inv.row(col));
    const Rat p = a(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || a(i, col) == Rat(0)) continue;
      const Rat f = a(i, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// A particular rational solution of m*x = v, with free variables set to 0;
/// absent when the system is inconsistent.
inline std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& v) {
  if (m.rows() != v.size()) throw std::invalid_argument("solve_linear: size mismatch");
  const Eigen::Index rows = m.rows(), cols = m.cols();
  RatMatrix a(rows, cols + 1);
  a.leftCols(cols) = m;
  a.col(cols) = v;
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < rows; ++i)
      if (a(i, col) != Rat(0)) { pivot = i; break; }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(row));
    const Rat p = a(row, col);
    for (Eigen::Index j = col; j <= cols; ++j) a(row, j) /= p;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || a(i, col) == Rat(0)) continue;
      const Rat f = a(i, col);
      for (Eigen::Index j = col; j <= cols; ++j) a(i, j) -= f * a(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (Eigen::Index i = row; i < rows; ++i)
    if (a(i, cols) != Rat(0)) return std::nullopt;
  RatVector x = RatVector::Zero(cols);
  for (size_t k = 0; k < pivot_col.size(); ++k)
    x(pivot_col[k]) = a(static_cast<Eigen::Index>(k), cols);
  return x;
}

/**
 * An integer solution of m*x = v, or absent.
 *
 * When m has full column rank the rational solution is unique, so absence is
 * authoritative.  Otherwise the particular solution found by elimination is
 * returned when it happens to be integral (callers accepting any solution).
 */
inline std::optional<RatVector> solve_integral(const RatMatrix& m, const RatVector& v) {
  auto x = solve_linear(m, v);
  if (!x || !is_integer_vector(*x)) return std::nullopt;
  return x;
}

/// Scales a nonzero rational vector by a positive factor to primitive
/// integer coordinates (content 1).  Direction is preserved.
inline RatVector primitive_direction(const RatVector& v) {
  Int scale = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) scale = lcm(scale, v(i).denominator());
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    g = gcd(g, Int(v(i).numerator() * (scale / v(i).denominator())));
  if (g == 0) throw std::invalid_argument("primitive_direction: zero vector");
  RatVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out(i) = Rat(Int(v(i).numerator() * (scale / v(i).denominator()) / g));
  return out;
}

}  // namespace regcoh

#endif  // REGCOH_LINALG_HPP
