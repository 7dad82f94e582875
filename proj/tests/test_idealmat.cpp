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
#include <gtest/gtest.h>

#include <algorithm>
#include <complex>

#include <idlat/idlat.hpp>

#include "test_support.hpp"

using namespace idlat;
using idlat::testing::Gen;

namespace {

QMatrix rows(std::vector<std::vector<long>> r)
{
  QMatrix m(r.size(), r.front().size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j)
      m(i, j) = r[i][j];
  return m;
}

// Oracle: multiply a vector by x modulo phi directly on coefficients.
QVector times_x(const QVector& v, const Poly& phi)
{
  std::size_t n = v.size();
  QVector out(n);
  Rational top = v[n - 1];
  for (std::size_t i = n - 1; i >= 1; --i)
    out[i] = v[i - 1];
  out[0] = 0;
  for (std::size_t i = 0; i < n; ++i)
    out[i] -= top * phi[i];
  return out;
}

using cd = std::complex<double>;

// Largest |(W A - diag(lambda) W)_{ij}| relative to |W A|, where W has rows
// (1, w, ..., w^(n-1)). Zero iff each lambda_i is an eigenvalue of A with
// left eigenvector row i.
double left_eigen_residual(const QMatrix& a, const std::vector<cd>& w, const std::vector<cd>& lambda)
{
  std::size_t n = a.rows();
  DMatrix ad = to_double(a);
  double worst = 0, scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<cd> row(n);
    cd p = 1;
    for (std::size_t k = 0; k < n; ++k, p *= w[i])
      row[k] = p;
    for (std::size_t j = 0; j < n; ++j) {
      cd wa = 0;
      for (std::size_t k = 0; k < n; ++k)
        wa += row[k] * ad(k, j);
      scale = std::max(scale, std::abs(wa));
      worst = std::max(worst, std::abs(wa - lambda[i] * row[j]));
    }
  }
  return worst / scale;
}

} // namespace

TEST(RotationMatrix, Examples)
{
  EXPECT_EQ(rotation_matrix(cyclic_context(3)), rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(rotation_matrix(cyclic_context(4)), rows({{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(rotation_matrix(cyclic_context(2)), rows({{0, 1}, {1, 0}}));
  // x^3 - x - 1: multiplication by x sends x^2 to x + 1
  EXPECT_EQ(rotation_matrix(idlat::testing::trinomial_context(3)), rows({{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}));
}

TEST(RotationMatrix, CharacteristicPolynomialIsPhi)
{
  for (const auto& p : {Poly{-1, 0, 0, 1}, Poly{-1, -1, 0, 0, 1}, Poly{2, -3, 0, 1, 0, 1}, Poly{5, 0, 1}}) {
    QuotientContext c(p);
    EXPECT_EQ(Poly(characteristic_polynomial(rotation_matrix(c))), p);
  }
}

TEST(RotationMatrix, MatchesMultiplicationByX)
{
  Gen gen(1);
  auto c = idlat::testing::trinomial_context(5);
  for (int t = 0; t < 20; ++t) {
    QVector v = gen.vector(5, -4, 4, 3);
    EXPECT_EQ(rotation_matrix(c) * v, times_x(v, c.phi()));
  }
}

TEST(IdealMatrix, UnitVectorsGiveRotationPowers)
{
  for (const auto& c : {cyclic_context(4), idlat::testing::trinomial_context(4)}) {
    EXPECT_EQ(ideal_matrix(RingElement::unit_vector(c, 1)).entries(), QMatrix::identity(4));
    QMatrix hk = QMatrix::identity(4);
    for (std::size_t k = 1; k <= 4; ++k) {
      EXPECT_EQ(ideal_matrix(RingElement::unit_vector(c, k)).entries(), hk);
      hk = rotation_matrix(c) * hk;
    }
  }
}

TEST(IdealMatrix, CirculantExample)
{
  auto c = cyclic_context(3);
  RingElement f(c, QVector{1, 2, 3});
  EXPECT_EQ(ideal_matrix(f).entries(), rows({{1, 3, 2}, {2, 1, 3}, {3, 2, 1}}));
  EXPECT_EQ(ideal_matrix_as_polynomial(f), ideal_matrix(f).entries());
}

TEST(IdealMatrix, IntegralIffGeneratorIntegral)
{
  Gen gen(2);
  auto c = idlat::testing::trinomial_context(3);
  for (int t = 0; t < 30; ++t) {
    RingElement f = gen.element(c);
    EXPECT_EQ(is_integral(ideal_matrix(f).entries()), f.is_integral());
  }
}

TEST(ConvProduct, Examples)
{
  auto c = cyclic_context(3);
  RingElement g(c, QVector{4, -1, 7});
  EXPECT_EQ(conv_product(RingElement::one(c), g), g);
  EXPECT_EQ(conv_product(RingElement::unit_vector(c, 2), RingElement::unit_vector(c, 3)), RingElement::one(c));
  RingElement f(c, QVector{1, 2, 3});
  EXPECT_EQ(conv_product(f, RingElement::unit_vector(c, 1)), f);
  EXPECT_THROW(conv_product(f, RingElement::one(cyclic_context(4))), ContextMismatch);
}

TEST(IdealDet, Examples)
{
  auto c3 = cyclic_context(3);
  EXPECT_EQ(ideal_det(RingElement::one(c3)).exact, 1);
  auto d = ideal_det(RingElement::unit_vector(c3, 3));
  EXPECT_EQ(d.exact, 1);
  EXPECT_NEAR(d.spectral, 1.0, 1e-12);
  auto c2 = cyclic_context(2);
  auto z = ideal_det(RingElement(c2, QVector{1, 1}));
  EXPECT_EQ(z.exact, 0);
  EXPECT_NEAR(z.spectral, 0.0, 1e-12);
  // circulant (1,2,3): det = 1 + 8 + 27 - 3*6 = 18
  EXPECT_EQ(ideal_det(RingElement(c3, QVector{1, 2, 3})).exact, 18);
}

TEST(IdealInverse, Examples)
{
  auto c3 = cyclic_context(3);
  EXPECT_EQ(ideal_inverse(RingElement::one(c3)).entries(), QMatrix::identity(3));
  EXPECT_EQ(ideal_inverse(RingElement::unit_vector(c3, 3)).entries(), rotation_matrix(c3));

  auto c4 = cyclic_context(4);
  RingElement g(c4, QVector{-2, 1, 0, 0});
  IdealMatrix inv = ideal_inverse(g);
  EXPECT_EQ(ideal_matrix(g).entries() * inv.entries(), QMatrix::identity(4));
  EXPECT_EQ(inv.entries(), inverse(ideal_matrix(g).entries()));
  EXPECT_EQ(inv.generator().coeffs(),
            (QVector{Rational(-8, 15), Rational(-4, 15), Rational(-2, 15), Rational(-1, 15)}));

  EXPECT_THROW(ideal_inverse(RingElement(cyclic_context(2), QVector{1, 1})), NotCoprime);
}

TEST(IdealInverse, InvertibleExactlyWhenCoprime)
{
  Gen gen(31);
  for (std::size_t n : {2, 3, 4}) {
    auto c = cyclic_context(n);
    for (int t = 0; t < 40; ++t) {
      RingElement f = gen.integer_element(c, 2);
      bool coprime = !f.is_zero() && gcd(f.poly(), c.phi()).degree() == 0;
      EXPECT_EQ(determinant(ideal_matrix(f).entries()) != 0, coprime) << f.poly();
      if (coprime) {
        EXPECT_EQ(ideal_matrix(f).entries() * ideal_inverse(f).entries(), QMatrix::identity(n));
      }
    }
  }
}

TEST(Conjugate, Examples)
{
  auto c = cyclic_context(3);
  EXPECT_EQ(conjugate(RingElement(c, QVector{1, 2, 3})).value.coeffs(), (QVector{3, 2, 1}));
  EXPECT_EQ(conjugate(RingElement::unit_vector(c, 1)).value, RingElement::unit_vector(c, 3));
  RingElement pal(c, QVector{5, -1, 5});
  EXPECT_EQ(conjugate(pal).value, pal);
  Gen gen(4);
  for (int t = 0; t < 20; ++t) {
    RingElement g = gen.element(c);
    EXPECT_EQ(conjugate(conjugate(g).value).value, g);
  }
}

TEST(CirculantTranspose, Examples)
{
  auto c3 = cyclic_context(3);
  EXPECT_EQ(circulant_transpose(RingElement::one(c3)).entries(), QMatrix::identity(3));
  EXPECT_EQ(circulant_transpose(RingElement(c3, QVector{1, 2, 3})).entries(),
            rows({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}));
  auto c5 = cyclic_context(5);
  QMatrix h = rotation_matrix(c5);
  EXPECT_EQ(circulant_transpose(RingElement::unit_vector(c5, 2)).entries(), c5.rotation_power(4));
  EXPECT_EQ(h.transpose(), c5.rotation_power(4));
}

TEST(CirculantTranspose, RejectsOtherModuli)
{
  auto t = idlat::testing::trinomial_context(3);
  EXPECT_THROW(circulant_transpose(RingElement::one(t)), UnsupportedModulus);
  QuotientContext neg(Poly{1, 0, 0, 1}); // x^3 + 1
  EXPECT_THROW(circulant_transpose(RingElement::one(neg)), UnsupportedModulus);
}

TEST(CirculantTranspose, EqualsTransposeOnRandomInputs)
{
  Gen gen(8);
  for (std::size_t n : {2, 3, 5, 7}) {
    auto c = cyclic_context(n);
    for (int t = 0; t < 10; ++t) {
      RingElement g = gen.element(c);
      EXPECT_EQ(circulant_transpose(g).entries(), ideal_matrix(g).entries().transpose());
    }
  }
}

// Homomorphism, commutativity, linearity, injectivity and the polynomial-in-H
// form, all with exact equality.
TEST(IdealMatrixProperties, ExactIdentities)
{
  Gen gen(2718);
  std::vector<QuotientContext> ctxs;
  for (std::size_t n : {2, 3, 4, 8}) {
    ctxs.push_back(cyclic_context(n));
    ctxs.push_back(idlat::testing::trinomial_context(n));
  }
  for (int t = 0; t < 120; ++t) {
    const auto& c = ctxs[static_cast<std::size_t>(t) % ctxs.size()];
    RingElement f = gen.element(c), g = gen.element(c);
    Rational lambda = gen.rational(-6, 6, 5);
    QMatrix hf = ideal_matrix(f).entries(), hg = ideal_matrix(g).entries();
    EXPECT_EQ(hf, ideal_matrix_as_polynomial(f));
    EXPECT_EQ(hf * hg, ideal_matrix(conv_product(f, g)).entries());
    EXPECT_EQ(hf * hg, hg * hf);
    EXPECT_EQ(conv_product(f, g), ring_mul(f, g));
    EXPECT_EQ(ideal_matrix(f + g).entries(), hf + hg);
    EXPECT_EQ(ideal_matrix(lambda * f).entries(), lambda * hf);
    EXPECT_EQ(hf == hg, f == g);
    EXPECT_EQ(hf.is_zero(), f.is_zero());
  }
  auto c = cyclic_context(4);
  EXPECT_TRUE(ideal_matrix(RingElement::zero(c)).entries().is_zero());
}

TEST(IdealMatrixProperties, SpectrumIsGeneratorAtRoots)
{
  Gen gen(99);
  std::vector<QuotientContext> ctxs{cyclic_context(3), cyclic_context(8), idlat::testing::trinomial_context(4),
                                    idlat::testing::trinomial_context(8)};
  for (int t = 0; t < 40; ++t) {
    const auto& c = ctxs[static_cast<std::size_t>(t) % ctxs.size()];
    RingElement f = gen.element(c);
    QMatrix hf = ideal_matrix(f).entries();
    auto lambda = ideal_spectrum(f);
    EXPECT_LT(left_eigen_residual(hf, c.roots(), lambda), 1e-9);

    // characteristic polynomial of H*(f) against prod (x - f(w_i))
    auto expect = poly_from_roots(lambda);
    QVector cp = characteristic_polynomial(hf);
    double scale = 1;
    for (const auto& z : expect)
      scale = std::max(scale, std::abs(z));
    for (std::size_t k = 0; k < cp.size(); ++k)
      EXPECT_LT(std::abs(expect[k] - cd(cp[k].get_d(), 0)), 1e-6 * scale);

    auto det = ideal_det(f);
    EXPECT_LE(std::fabs(det.exact.get_d() - det.spectral), 1e-6 * std::max(1.0, std::fabs(det.exact.get_d())));
  }
}

TEST(IdealMatrixProperties, GramSpectrumOfCirculant)
{
  Gen gen(44);
  for (std::size_t n : {3, 4, 6}) {
    auto c = cyclic_context(n);
    for (int t = 0; t < 15; ++t) {
      RingElement g = gen.integer_prime_spot(c);
      QMatrix h = ideal_matrix(g).entries();
      auto ev = symmetric_eigenvalues(to_double(h.transpose() * h));
      std::vector<double> sq;
      for (std::size_t k = 0; k < n; ++k) {
        cd theta = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
        cd v = 0;
        for (std::size_t j = n; j-- > 0;)
          v = v * theta + g.coeffs()[j].get_d();
        sq.push_back(std::norm(v));
      }
      std::sort(sq.begin(), sq.end());
      for (std::size_t i = 0; i < n; ++i)
        EXPECT_NEAR(ev[i], sq[i], 1e-6 * std::max(1.0, sq[i]));
    }
  }
}
