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
#ifndef IDLAT_IDEAL_MATRIX_HPP
#define IDLAT_IDEAL_MATRIX_HPP

#include <algorithm>
#include <complex>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "quotient.hpp"

namespace idlat {

/// H*(f) = [f, Hf, ..., H^(n-1) f] together with its generator f.
class IdealMatrix
{
public:
  IdealMatrix(RingElement generator, QMatrix entries)
      : generator_(std::move(generator)), entries_(std::move(entries))
  {}

  const RingElement& generator() const noexcept { return generator_; }
  const QMatrix& entries() const noexcept { return entries_; }
  const QuotientContext& context() const noexcept { return generator_.context(); }
  std::size_t n() const noexcept { return entries_.rows(); }

  friend bool operator==(const IdealMatrix& a, const IdealMatrix& b) { return a.entries_ == b.entries_; }

private:
  RingElement generator_;
  QMatrix entries_;
};

/// Coefficient vector of g reversed.
struct ConjugateVector
{
  RingElement value;
};

inline const QMatrix& rotation_matrix(const QuotientContext& ctx) { return ctx.rotation(); }

/// Column stacking: column k is H^k f.
inline IdealMatrix ideal_matrix(const RingElement& f)
{
  const auto& ctx = f.context();
  std::size_t n = ctx.n();
  QMatrix m(n, n);
  QVector col = f.coeffs();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      m(i, k) = col[i];
    if (k + 1 < n)
      col = ctx.rotation() * col;
  }
  return IdealMatrix(f, std::move(m));
}

/// The same matrix as a polynomial in H: f_0 I + f_1 H + ... + f_(n-1) H^(n-1).
inline QMatrix ideal_matrix_as_polynomial(const RingElement& f)
{
  const auto& ctx = f.context();
  QVector c = f.coeffs();
  QMatrix m(ctx.n(), ctx.n());
  for (std::size_t k = 0; k < ctx.n(); ++k)
    if (c[k] != 0)
      m = m + c[k] * ctx.rotation_power(k);
  return m;
}

/// f * g = H*(f) g.
inline RingElement conv_product(const RingElement& f, const RingElement& g)
{
  RingElement::check_same(f, g);
  return RingElement(f.context(), ideal_matrix(f).entries() * g.coeffs());
}

struct IdealDeterminant
{
  Rational exact;
  double spectral;
};

/// det H*(f), exactly and as the product of f(w_i) over the roots of phi.
inline IdealDeterminant ideal_det(const RingElement& f)
{
  Rational exact = determinant(ideal_matrix(f).entries());
  std::complex<double> prod = 1.0;
  for (const auto& w : f.context().roots())
    prod *= f.poly().evaluate(w);
  return {exact, prod.real()};
}

/// The values f(w_i) at the roots of phi, i.e. the spectrum of H*(f).
inline std::vector<std::complex<double>> ideal_spectrum(const RingElement& f)
{
  std::vector<std::complex<double>> out;
  for (const auto& w : f.context().roots())
    out.push_back(f.poly().evaluate(w));
  return out;
}

/// (H*(f))^-1 = H*(u) with u f = 1 mod phi. Throws NotCoprime otherwise.
inline IdealMatrix ideal_inverse(const RingElement& f) { return ideal_matrix(inverse_mod_phi(f)); }

inline ConjugateVector conjugate(const RingElement& g)
{
  QVector c = g.coeffs();
  std::reverse(c.begin(), c.end());
  return {RingElement(g.context(), c)};
}

inline void require_cyclotomic_shift(const QuotientContext& ctx, const char* what)
{
  if (!ctx.is_cyclotomic_shift())
    throw UnsupportedModulus(std::string(what) + " requires phi = x^n - 1, got " + ctx.phi().str());
}

/// H*(H g-bar), which equals the transpose of H*(g) when phi = x^n - 1.
inline IdealMatrix circulant_transpose(const RingElement& g)
{
  const auto& ctx = g.context();
  require_cyclotomic_shift(ctx, "circulant transpose");
  QVector hg = ctx.rotation() * conjugate(g).value.coeffs();
  return ideal_matrix(RingElement(ctx, hg));
}

} // namespace idlat

#endif // IDLAT_IDEAL_MATRIX_HPP
