/* Copyright (C) 2026 The idlat Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef IDLAT_MATRIX_HPP
#define IDLAT_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace idlat {

/// Dense row-major matrix. Lattice bases store basis vectors as columns.
template <class T>
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill)
  {}

  static Matrix identity(std::size_t n)
  {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows)
  {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c)
        throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols)
  {
    return from_rows(cols).transpose();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const
  {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      v[i] = (*this)(i, j);
    return v;
  }

  std::vector<std::vector<T>> columns() const
  {
    std::vector<std::vector<T>> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      out.push_back(column(j));
    return out;
  }

  std::vector<T> row(std::size_t i) const
  {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const
  {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const
  {
    Matrix m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j)
        m(i, j) = (*this)(i, first + j);
    return m;
  }

  Matrix hconcat(const Matrix& rhs) const
  {
    if (rows_ != rhs.rows_)
      throw DimensionMismatch("hconcat: row counts differ");
    Matrix m(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j)
        m(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        m(i, cols_ + j) = rhs(i, j);
    }
    return m;
  }

  bool is_zero() const
  {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b)
  {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b)
  {
    check_same_shape(a, b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k)
      m.data_[k] += b.data_[k];
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b)
  {
    check_same_shape(a, b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k)
      m.data_[k] -= b.data_[k];
    return m;
  }

  friend Matrix operator*(const T& s, const Matrix& a)
  {
    Matrix m = a;
    for (auto& x : m.data_)
      x *= s;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b)
  {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("matrix product: inner dimensions differ");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0))
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
  {
    if (a.cols_ != v.size())
      throw DimensionMismatch("matrix-vector product: dimensions differ");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        out[i] += a(i, j) * v[j];
    return out;
  }

private:
  static void check_same_shape(const Matrix& a, const Matrix& b)
  {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;
using DMatrix = Matrix<double>;

template <class T>
T dot(std::span<const T> a, std::span<const T> b)
{
  assert(a.size() == b.size());
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b)
{
  return dot(std::span<const T>(a), std::span<const T>(b));
}

inline DMatrix to_double(const QMatrix& m)
{
  DMatrix d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      d(i, j) = m(i, j).get_d();
  return d;
}

inline bool is_integral(const QMatrix& m)
{
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j)))
        return false;
  return true;
}

/// Rank by exact row reduction.
inline std::size_t rank(QMatrix a)
{
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0)
      ++p;
    if (p == a.rows())
      continue;
    for (std::size_t j = c; j < a.cols(); ++j)
      std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0)
        continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Determinant by fraction-free (Bareiss) elimination. Rows are first scaled
/// to integers, so every intermediate division is exact in Z.
inline Rational determinant(const QMatrix& m)
{
  if (m.rows() != m.cols())
    throw DimensionMismatch("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0)
    return Rational(1);

  ZMatrix a(n, n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = lcm_of_denominators(m.row(i));
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = m(i, j) * l;
      a(i, j) = x.get_num();
    }
  }

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return Rational(0);
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  Rational d(a(n - 1, n - 1) * sign, scale);
  d.canonicalize();
  return d;
}

/// Exact inverse by Gauss-Jordan. Throws RankDeficient when singular.
inline QMatrix inverse(const QMatrix& m)
{
  if (m.rows() != m.cols())
    throw DimensionMismatch("inverse of a non-square matrix");
  std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0)
      ++p;
    if (p == n)
      throw RankDeficient("matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(p, j));
        std::swap(inv(c, j), inv(p, j));
      }
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0)
        continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Solves A x = b for A with full column rank. Returns nullopt when the
/// system is inconsistent.
inline std::optional<QVector> solve(const QMatrix& A, const QVector& b)
{
  if (A.rows() != b.size())
    throw DimensionMismatch("solve: right-hand side has wrong length");
  std::size_t n = A.rows(), m = A.cols();
  QMatrix a = A.hconcat(QMatrix::from_columns({b}));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c) == 0)
      ++p;
    if (p == n)
      continue;
    for (std::size_t j = 0; j <= m; ++j)
      std::swap(a(r, j), a(p, j));
    Rational piv = a(r, c);
    for (std::size_t j = c; j <= m; ++j)
      a(r, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a(i, c) == 0)
        continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j <= m; ++j)
        a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (r != m)
    throw RankDeficient("solve: matrix columns are linearly dependent");
  for (std::size_t i = r; i < n; ++i)
    if (a(i, m) != 0)
      return std::nullopt;
  QVector x(m);
  for (std::size_t i = 0; i < r; ++i)
    x[pivots[i]] = a(i, m);
  return x;
}

/// Characteristic polynomial det(xI - A), coefficients lowest degree first,
/// by the Faddeev-LeVerrier recursion (exact over Q).
inline QVector characteristic_polynomial(const QMatrix& a)
{
  if (a.rows() != a.cols())
    throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  std::size_t n = a.rows();
  QVector c(n + 1);
  c[n] = 1;
  QMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) += c[n - k + 1];
    QMatrix am = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> symmetric_eigenvalues(DMatrix a, double tol = 1e-12, int max_sweeps = 100)
{
  if (a.rows() != a.cols())
    throw DimensionMismatch("eigenvalues of a non-square matrix");
  std::size_t n = a.rows();
  double scale = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scale = std::max(scale, std::fabs(a(i, j)));
  if (scale == 0)
    return std::vector<double>(n, 0.0);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        off = std::max(off, std::fabs(a(i, j)));
    if (off <= tol * scale * 1e-3)
      break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (std::fabs(apq) <= 1e-300)
          continue;
        double theta = (a(q, q) - a(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i)
    ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Upper-triangular R with G = R'R. Throws RankDeficient when G is not
/// numerically positive definite.
inline DMatrix cholesky_upper(const DMatrix& g)
{
  std::size_t n = g.rows();
  DMatrix r(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double d = g(i, i);
    for (std::size_t k = 0; k < i; ++k)
      d -= r(k, i) * r(k, i);
    if (!(d > 0))
      throw RankDeficient("Gram matrix is not positive definite");
    r(i, i) = std::sqrt(d);
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = g(i, j);
      for (std::size_t k = 0; k < i; ++k)
        s -= r(k, i) * r(k, j);
      r(i, j) = s / r(i, i);
    }
  }
  return r;
}

} // namespace idlat

#endif // IDLAT_MATRIX_HPP
