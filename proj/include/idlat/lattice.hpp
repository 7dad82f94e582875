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
#ifndef IDLAT_LATTICE_HPP
#define IDLAT_LATTICE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "enumerate.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace idlat {

/// A lattice given by an n x m rational basis matrix whose columns are
/// linearly independent (m <= n). The Gram matrix B'B and its determinant
/// are computed once, exactly.
class LatticeBasis
{
public:
  explicit LatticeBasis(QMatrix basis) : basis_(std::move(basis))
  {
    if (basis_.cols() > basis_.rows())
      throw RankDeficient("basis has more columns (" + std::to_string(basis_.cols()) + ") than dimension (" +
                          std::to_string(basis_.rows()) + ")");
    gram_ = basis_.transpose() * basis_;
    det_gram_ = determinant(gram_);
    if (det_gram_ == 0)
      throw RankDeficient("basis columns are linearly dependent");
  }

  static LatticeBasis from_columns(const std::vector<QVector>& cols)
  {
    return LatticeBasis(QMatrix::from_columns(cols));
  }

  static LatticeBasis identity(std::size_t n) { return LatticeBasis(QMatrix::identity(n)); }

  const QMatrix& matrix() const noexcept { return basis_; }
  /// Ambient dimension.
  std::size_t n() const noexcept { return basis_.rows(); }
  /// Rank.
  std::size_t m() const noexcept { return basis_.cols(); }
  bool full_rank() const noexcept { return n() == m(); }
  bool is_integral() const { return idlat::is_integral(basis_); }
  QVector column(std::size_t j) const { return basis_.column(j); }
  std::vector<QVector> columns() const { return basis_.columns(); }
  const QMatrix& gram() const noexcept { return gram_; }
  const Rational& det_gram() const noexcept { return det_gram_; }

  /// The vector B x.
  QVector point(const std::vector<long>& x) const
  {
    QVector v(n());
    for (std::size_t j = 0; j < m(); ++j)
      if (x[j] != 0)
        for (std::size_t i = 0; i < n(); ++i)
          v[i] += basis_(i, j) * x[j];
    return v;
  }

  LatticeBasis scaled(const Rational& k) const { return LatticeBasis(k * basis_); }

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) { return a.basis_ == b.basis_; }

private:
  QMatrix basis_;
  QMatrix gram_;
  Rational det_gram_;
};

inline void require_full_rank(const LatticeBasis& L, const char* what)
{
  if (!L.full_rank())
    throw RankDeficient(std::string(what) + " requires a full-rank lattice (n = " + std::to_string(L.n()) +
                        ", rank = " + std::to_string(L.m()) + ")");
}

struct GramDeterminant
{
  QMatrix gram;
  Rational det_gram; ///< det(B'B) > 0, exact
  double d;          ///< d(L) = sqrt(det(B'B))
};

inline GramDeterminant gram_det(const LatticeBasis& L)
{
  return {L.gram(), L.det_gram(), std::sqrt(L.det_gram().get_d())};
}

struct GramSpectrum
{
  QMatrix gram;
  Rational det_gram;
  std::vector<double> eigenvalues; ///< ascending
  double eigen_min;
};

inline GramSpectrum gram_spectrum(const LatticeBasis& L)
{
  auto ev = symmetric_eigenvalues(to_double(L.gram()));
  return {L.gram(), L.det_gram(), ev, ev.front()};
}

/// (B')^-1. Its columns d_j satisfy <b_i, d_j> = [i == j].
inline LatticeBasis dual_basis(const LatticeBasis& L)
{
  require_full_rank(L, "dual basis");
  return LatticeBasis(inverse(L.matrix()).transpose());
}

struct GramSchmidt
{
  std::vector<QVector> vectors; ///< b_1*, ..., b_m*
  QVector sq_norms;             ///< |b_i*|^2, exact
  Rational min_sq_norm;         ///< |B*|^2 = min_i |b_i*|^2
  double min_norm() const { return std::sqrt(min_sq_norm.get_d()); }
};

/// Exact Gram-Schmidt over the ordered columns.
inline GramSchmidt gram_schmidt(const LatticeBasis& L)
{
  GramSchmidt gs;
  for (std::size_t i = 0; i < L.m(); ++i) {
    QVector v = L.column(i);
    for (std::size_t j = 0; j < i; ++j) {
      Rational mu = dot(L.column(i), gs.vectors[j]) / gs.sq_norms[j];
      for (std::size_t k = 0; k < v.size(); ++k)
        v[k] -= mu * gs.vectors[j][k];
    }
    gs.sq_norms.push_back(dot(v, v));
    gs.vectors.push_back(std::move(v));
  }
  gs.min_sq_norm = *std::min_element(gs.sq_norms.begin(), gs.sq_norms.end());
  return gs;
}

/// Exact x'Gx for the Gram matrix G.
inline Rational quadratic_form(const QMatrix& g, const std::vector<long>& x)
{
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0)
      continue;
    Rational row = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] != 0)
        row += g(i, j) * x[j];
    s += row * x[i];
  }
  return s;
}

struct ShortestVector
{
  Rational sq_length; ///< lambda_1^2, exact
  double length;      ///< lambda_1
  ZVector witness;    ///< integer coefficients x with |Bx| = lambda_1
  QVector vector;     ///< B x
};

namespace detail {

/// Sign-normalized (first nonzero entry positive) lexicographic order on
/// coefficient vectors; picks one canonical witness among +-x and ties.
inline std::vector<long> canonical_sign(std::vector<long> x)
{
  for (long v : x) {
    if (v == 0)
      continue;
    if (v < 0)
      for (auto& y : x)
        y = -y;
    break;
  }
  return x;
}

} // namespace detail

/// lambda_1(L) by exhaustive ellipsoid enumeration. The search radius is the
/// shorter of `radius_hint` and the shortest basis column; if nothing is
/// found inside a too-small hint the shortest column radius is used.
/// Candidates are compared with exact squared norms; among equally short
/// vectors the witness is the lexicographically smallest after sign
/// normalization.
inline ShortestVector min_distance(const LatticeBasis& L,
                                   double radius_hint = std::numeric_limits<double>::infinity(),
                                   std::size_t budget = default_enumeration_budget)
{
  const QMatrix& g = L.gram();
  Rational col_min = g(0, 0);
  for (std::size_t j = 1; j < L.m(); ++j)
    col_min = std::min(col_min, Rational(g(j, j)));

  auto run = [&](double radius_sq) -> std::optional<std::pair<Rational, std::vector<long>>> {
    std::optional<std::pair<Rational, std::vector<long>>> best;
    std::vector<double> zero(L.m(), 0.0);
    double slack = radius_sq * (1 + 1e-9) + 1e-300;
    enumerate_ellipsoid(
        to_double(g), zero, slack,
        [&](const std::vector<long>& x, double) {
          if (std::all_of(x.begin(), x.end(), [](long v) { return v == 0; }))
            return true;
          Rational q = quadratic_form(g, x);
          auto cx = detail::canonical_sign(x);
          if (!best || q < best->first || (q == best->first && cx < best->second))
            best = std::make_pair(q, cx);
          return true;
        },
        budget);
    return best;
  };

  double col_min_d = col_min.get_d();
  std::optional<std::pair<Rational, std::vector<long>>> best;
  if (radius_hint * radius_hint < col_min_d)
    best = run(radius_hint * radius_hint);
  if (!best)
    best = run(col_min_d);
  if (!best)
    throw IterationFailure("enumeration missed the shortest basis column");

  ShortestVector sv;
  sv.sq_length = best->first;
  sv.length = std::sqrt(sv.sq_length.get_d());
  for (long v : best->second)
    sv.witness.emplace_back(v);
  sv.vector = L.point(best->second);
  return sv;
}

/// sqrt of the smallest eigenvalue of B'B; a lower bound on lambda_1.
inline double eigen_lower_bound(const LatticeBasis& L)
{
  return std::sqrt(std::max(0.0, gram_spectrum(L).eigen_min));
}

/// Column-style Hermite normal form of an integer matrix: returns an n x r
/// matrix (r = rank) whose columns form a basis of the column lattice. Pivot
/// rows strictly increase, pivots are positive and entries left of a pivot
/// in its row lie in [0, pivot).
inline ZMatrix hermite_normal_form(ZMatrix a)
{
  const std::size_t n = a.rows(), k = a.cols();
  auto col_combine = [&](std::size_t c1, std::size_t c2, const Integer& p, const Integer& q, const Integer& r,
                         const Integer& s) {
    // (c1, c2) <- (p c1 + q c2, r c1 + s c2)
    for (std::size_t i = 0; i < n; ++i) {
      Integer x = a(i, c1), y = a(i, c2);
      a(i, c1) = p * x + q * y;
      a(i, c2) = r * x + s * y;
    }
  };

  std::size_t piv = 0;
  for (std::size_t row = 0; row < n && piv < k; ++row) {
    for (std::size_t j = piv + 1; j < k; ++j) {
      if (a(row, j) == 0)
        continue;
      if (a(row, piv) == 0) {
        for (std::size_t i = 0; i < n; ++i)
          std::swap(a(i, piv), a(i, j));
        continue;
      }
      Integer g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a(row, piv).get_mpz_t(), a(row, j).get_mpz_t());
      Integer ap = a(row, piv) / g, bp = a(row, j) / g;
      col_combine(piv, j, p, q, Integer(-bp), ap);
    }
    if (a(row, piv) == 0)
      continue;
    if (a(row, piv) < 0)
      for (std::size_t i = 0; i < n; ++i)
        a(i, piv) = -a(i, piv);
    for (std::size_t c = 0; c < piv; ++c) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), a(row, c).get_mpz_t(), a(row, piv).get_mpz_t());
      if (f == 0)
        continue;
      for (std::size_t i = 0; i < n; ++i)
        a(i, c) -= f * a(i, piv);
    }
    ++piv;
  }
  ZMatrix h(n, piv);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < piv; ++j)
      h(i, j) = a(i, j);
  return h;
}

/// Basis of the lattice generated by the (possibly dependent) rational
/// columns of `gens`: clear denominators, take the HNF, scale back.
inline LatticeBasis lattice_from_generators(const QMatrix& gens)
{
  Integer den = 1;
  for (std::size_t i = 0; i < gens.rows(); ++i)
    den = lcm(den, lcm_of_denominators(gens.row(i)));
  ZMatrix z(gens.rows(), gens.cols());
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = 0; j < gens.cols(); ++j) {
      Rational v = gens(i, j) * den;
      z(i, j) = v.get_num();
    }
  ZMatrix h = hermite_normal_form(std::move(z));
  if (h.cols() == 0)
    throw ZeroInput("generators span only the zero lattice");
  QMatrix q(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) {
      q(i, j) = Rational(h(i, j), den);
      q(i, j).canonicalize();
    }
  return LatticeBasis(std::move(q));
}

/// Canonical (HNF) basis of the same lattice.
inline LatticeBasis canonical_basis(const LatticeBasis& L) { return lattice_from_generators(L.matrix()); }

/// L1 + L2. Rational bases always sum to a lattice.
inline LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b)
{
  if (a.n() != b.n())
    throw DimensionMismatch("lattice sum of different ambient dimensions");
  return lattice_from_generators(a.matrix().hconcat(b.matrix()));
}

/// Converts a floating basis to an exact one, refusing entries that are not
/// recognizably rational (small denominator). Sums such as Z + sqrt(2) Z are
/// dense rather than discrete, so they cannot be represented.
inline QMatrix rationalize_matrix(const DMatrix& m, long max_den = 10000)
{
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto r = rationalize(m(i, j), max_den);
      if (!r)
        throw IrrationalInput("entry " + std::to_string(m(i, j)) +
                              " is not rational; a sum with irrational ratios is not a lattice");
      q(i, j) = *r;
    }
  return q;
}

inline LatticeBasis lattice_sum(const DMatrix& a, const DMatrix& b)
{
  QMatrix qa = rationalize_matrix(a), qb = rationalize_matrix(b);
  if (qa.rows() != qb.rows())
    throw DimensionMismatch("lattice sum of different ambient dimensions");
  return lattice_from_generators(qa.hconcat(qb));
}

/// Integer x with B x = v, if any.
inline std::optional<ZVector> membership(const LatticeBasis& L, const QVector& v)
{
  if (v.size() != L.n())
    throw DimensionMismatch("membership: vector has length " + std::to_string(v.size()) + ", lattice dimension is " +
                            std::to_string(L.n()));
  auto x = solve(L.matrix(), v);
  if (!x)
    return std::nullopt;
  ZVector z;
  for (const auto& q : *x) {
    if (!is_integer(q))
      return std::nullopt;
    z.push_back(q.get_num());
  }
  return z;
}

inline bool contains(const LatticeBasis& L, const QVector& v) { return membership(L, v).has_value(); }

/// Every basis column of `sub` lies in `L`.
inline bool is_sublattice(const LatticeBasis& sub, const LatticeBasis& L)
{
  for (std::size_t j = 0; j < sub.m(); ++j)
    if (!contains(L, sub.column(j)))
      return false;
  return true;
}

inline bool same_lattice(const LatticeBasis& a, const LatticeBasis& b)
{
  return a.n() == b.n() && a.m() == b.m() && is_sublattice(a, b) && is_sublattice(b, a);
}

/// |L / N| for a sublattice N of L of the same rank. Computed as |det C|
/// where N = B_L C, and cross-checked against d(N) / d(L).
inline Integer quotient_index(const LatticeBasis& L, const LatticeBasis& N)
{
  if (L.n() != N.n())
    throw DimensionMismatch("quotient index of lattices in different dimensions");
  if (L.m() != N.m())
    throw RankDeficient("quotient index needs equal ranks (" + std::to_string(L.m()) + " vs " +
                        std::to_string(N.m()) + ")");
  QMatrix c(L.m(), N.m());
  for (std::size_t j = 0; j < N.m(); ++j) {
    auto x = membership(L, N.column(j));
    if (!x)
      throw NotSublattice("column " + std::to_string(j) + " of N is not in L");
    for (std::size_t i = 0; i < L.m(); ++i)
      c(i, j) = (*x)[i];
  }
  Rational det = determinant(c);
  Rational idx = det < 0 ? Rational(-det) : det;
  Rational ratio = N.det_gram() / L.det_gram();
  if (idx * idx != ratio || !is_integer(idx))
    throw DomainError("quotient index is not an integer; inconsistent lattices");
  return idx.get_num();
}

} // namespace idlat

#endif // IDLAT_LATTICE_HPP
