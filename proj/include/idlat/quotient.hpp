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
#ifndef IDLAT_QUOTIENT_HPP
#define IDLAT_QUOTIENT_HPP

#include <complex>
#include <memory>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace idlat {

/**
 * The quotient ring Q[x]/<phi> for a monic integer phi of degree n with
 * phi(0) != 0 and no repeated roots.
 *
 * Holds the rotation (companion) matrix H whose action on coefficient
 * vectors is multiplication by x, its powers H^0..H^(n-1), and numerical
 * approximations of the n complex roots of phi. Copies share one immutable
 * state block.
 */
class QuotientContext
{
public:
  explicit QuotientContext(const Poly& phi, RootOptions root_options = {})
  {
    if (phi.degree() < 1)
      throw DomainError("phi must have degree >= 1");
    if (!phi.is_monic())
      throw DomainError("phi must be monic, got " + phi.str());
    if (!phi.is_integral())
      throw DomainError("phi must have integer coefficients, got " + phi.str());
    if (phi[0] == 0)
      throw ZeroConstantTerm("phi(0) must be nonzero, got " + phi.str());
    if (!is_squarefree(phi))
      throw NotSquarefree("phi has a repeated root: " + phi.str());

    auto s = std::make_shared<State>();
    s->phi = phi;
    s->n = static_cast<std::size_t>(phi.degree());
    std::size_t n = s->n;

    // first row (0,...,0,-phi_0), subdiagonal identity, last column -phi_k.
    // Column j of H is x * x^j reduced mod phi.
    s->rotation = QMatrix(n, n);
    for (std::size_t i = 1; i < n; ++i)
      s->rotation(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i)
      s->rotation(i, n - 1) = -phi[i];

    s->powers.reserve(n);
    s->powers.push_back(QMatrix::identity(n));
    for (std::size_t k = 1; k < n; ++k)
      s->powers.push_back(s->rotation * s->powers.back());

    s->roots = complex_roots(phi, root_options);
    auto r = detail::binomial_root_value(phi);
    s->binomial = r.has_value();
    s->unit_binomial = r.has_value() && *r == 1;
    state_ = std::move(s);
  }

  const Poly& phi() const noexcept { return state_->phi; }
  std::size_t n() const noexcept { return state_->n; }
  const QMatrix& rotation() const noexcept { return state_->rotation; }
  /// H^k for 0 <= k < n.
  const QMatrix& rotation_power(std::size_t k) const { return state_->powers.at(k); }
  const std::vector<std::complex<double>>& roots() const noexcept { return state_->roots; }
  /// Always true for a constructed context; the constructor rejects repeated roots.
  bool squarefree() const noexcept { return true; }
  /// phi = x^n - r
  bool is_binomial() const noexcept { return state_->binomial; }
  /// phi = x^n - 1
  bool is_cyclotomic_shift() const noexcept { return state_->unit_binomial; }

  friend bool operator==(const QuotientContext& a, const QuotientContext& b)
  {
    return a.state_ == b.state_ || a.state_->phi == b.state_->phi;
  }

private:
  struct State
  {
    Poly phi;
    std::size_t n = 0;
    QMatrix rotation;
    std::vector<QMatrix> powers;
    std::vector<std::complex<double>> roots;
    bool binomial = false;
    bool unit_binomial = false;
  };
  std::shared_ptr<const State> state_;
};

/// x^n - 1.
inline QuotientContext cyclic_context(std::size_t n)
{
  QVector c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return QuotientContext(Poly(std::move(c)));
}

/// An element of Q[x]/<phi>, stored reduced (degree < n). The coefficient
/// vector and the polynomial are the same object viewed two ways.
class RingElement
{
public:
  RingElement(QuotientContext ctx, const Poly& p) : ctx_(std::move(ctx)), rep_(p % ctx_.phi()) {}

  /// From a coefficient vector of length n, lowest degree first.
  RingElement(QuotientContext ctx, const QVector& coeffs) : ctx_(std::move(ctx))
  {
    if (coeffs.size() != ctx_.n())
      throw DimensionMismatch("coefficient vector has length " + std::to_string(coeffs.size()) +
                              ", expected n = " + std::to_string(ctx_.n()));
    rep_ = Poly(coeffs);
  }

  static RingElement one(const QuotientContext& ctx) { return RingElement(ctx, Poly{1}); }
  static RingElement zero(const QuotientContext& ctx) { return RingElement(ctx, Poly()); }
  /// e_k, 1-based: t(x^(k-1)).
  static RingElement unit_vector(const QuotientContext& ctx, std::size_t k)
  {
    if (k < 1 || k > ctx.n())
      throw DimensionMismatch("unit vector index out of range");
    return RingElement(ctx, Poly::monomial(k - 1));
  }

  const QuotientContext& context() const noexcept { return ctx_; }
  const Poly& poly() const noexcept { return rep_; }
  QVector coeffs() const { return rep_.padded(ctx_.n()); }
  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool is_integral() const { return rep_.is_integral(); }

  friend bool operator==(const RingElement& a, const RingElement& b)
  {
    return a.ctx_ == b.ctx_ && a.rep_ == b.rep_;
  }

  friend RingElement operator+(const RingElement& a, const RingElement& b)
  {
    check_same(a, b);
    return RingElement(a.ctx_, a.rep_ + b.rep_);
  }

  friend RingElement operator-(const RingElement& a, const RingElement& b)
  {
    check_same(a, b);
    return RingElement(a.ctx_, a.rep_ - b.rep_);
  }

  friend RingElement operator*(const Rational& s, const RingElement& a)
  {
    return RingElement(a.ctx_, s * a.rep_);
  }

  friend RingElement operator*(const RingElement& a, const RingElement& b)
  {
    check_same(a, b);
    return RingElement(a.ctx_, a.rep_ * b.rep_);
  }

  static void check_same(const RingElement& a, const RingElement& b)
  {
    if (!(a.ctx_ == b.ctx_))
      throw ContextMismatch();
  }

private:
  QuotientContext ctx_;
  Poly rep_;
};

inline RingElement reduce_mod_phi(const Poly& p, const QuotientContext& ctx) { return RingElement(ctx, p); }

inline RingElement ring_mul(const RingElement& a, const RingElement& b) { return a * b; }

/// The unique u of degree < n with u*f = 1 mod phi.
/// Throws NotCoprime carrying gcd(f, phi) when no inverse exists.
inline RingElement inverse_mod_phi(const RingElement& f)
{
  const auto& ctx = f.context();
  if (f.is_zero())
    throw NotCoprime("zero has no inverse modulo " + ctx.phi().str(), ctx.phi().monic().str());
  Bezout b = xgcd(f.poly(), ctx.phi());
  if (b.gcd.degree() != 0)
    throw NotCoprime("gcd(" + f.poly().str() + ", " + ctx.phi().str() + ") = " + b.gcd.str() + " is not 1",
                     b.gcd.str());
  return RingElement(ctx, b.u);
}

/// Number of phi-cyclic subspaces of R^n, i.e. monic divisors of phi over
/// R[x]: 2^(r + c) for r real roots and c conjugate pairs.
inline std::size_t count_cyclic_subspaces(const QuotientContext& ctx, double tol = 1e-9)
{
  const auto& roots = ctx.roots();
  std::vector<bool> used(roots.size(), false);
  std::size_t real = 0, pairs = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i])
      continue;
    used[i] = true;
    if (std::fabs(roots[i].imag()) < tol) {
      ++real;
      continue;
    }
    std::size_t best = roots.size();
    double best_d = tol;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j])
        continue;
      double d = std::abs(roots[j] - std::conj(roots[i]));
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best == roots.size())
      throw IterationFailure("complex root without a conjugate partner; roots too inaccurate");
    used[best] = true;
    ++pairs;
  }
  return std::size_t{1} << (real + pairs);
}

} // namespace idlat

#endif // IDLAT_QUOTIENT_HPP
