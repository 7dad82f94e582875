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
#ifndef IDLAT_CYCLIC_HPP
#define IDLAT_CYCLIC_HPP

#include <algorithm>
#include <complex>
#include <vector>

#include "errors.hpp"
#include "ideal_matrix.hpp"
#include "lattice.hpp"
#include "quotient.hpp"

namespace idlat {

/// Proof that g is coprime to phi: its inverse u and the dual generator
/// T_g = H u-bar, with |T_g(w_i)| at the roots of phi.
struct PrimeSpotCertificate
{
  RingElement g;
  RingElement u;
  RingElement tg;
  std::vector<double> tg_values;
  double tg_min;
};

/// A lattice closed under multiplication by x (the rotation H), together
/// with the module generators it was built from (empty when unknown).
struct CyclicLattice
{
  LatticeBasis basis;
  QuotientContext ctx;
  std::vector<RingElement> generators;
};

/// L(H*(g)), the smallest cyclic lattice containing g. Dependent columns of
/// H*(g) (g not coprime to phi) are reduced away, leaving a lower-rank basis.
inline CyclicLattice minimal_cyclic_lattice(const RingElement& g)
{
  if (g.is_zero())
    throw ZeroInput("minimal cyclic lattice of the zero vector");
  return {lattice_from_generators(ideal_matrix(g).entries()), g.context(), {g}};
}

/// L(H*(a_1)) + ... + L(H*(a_m)): the image of the module generated by the
/// a_i. Each summand is checked to lie in the result.
inline CyclicLattice module_to_lattice(const std::vector<RingElement>& generators)
{
  if (generators.empty())
    throw ZeroInput("module_to_lattice needs at least one generator");
  const QuotientContext& ctx = generators.front().context();
  std::optional<LatticeBasis> acc;
  std::vector<LatticeBasis> parts;
  for (const auto& a : generators) {
    RingElement::check_same(generators.front(), a);
    if (a.is_zero())
      continue;
    LatticeBasis part = minimal_cyclic_lattice(a).basis;
    acc = acc ? lattice_sum(*acc, part) : part;
    parts.push_back(std::move(part));
  }
  if (!acc)
    throw ZeroInput("all generators are zero");
  for (const auto& p : parts)
    if (!is_sublattice(p, *acc))
      throw DomainError("internal: summand not contained in lattice sum");
  return {*acc, ctx, generators};
}

/// Closed under H? Checked on basis columns, which suffices by linearity.
inline bool is_cyclic(const LatticeBasis& L, const QuotientContext& ctx)
{
  if (L.n() != ctx.n())
    throw DimensionMismatch("lattice dimension " + std::to_string(L.n()) + " does not match phi of degree " +
                            std::to_string(ctx.n()));
  for (std::size_t j = 0; j < L.m(); ++j)
    if (!contains(L, ctx.rotation() * L.column(j)))
      return false;
  return true;
}

/// T_g = H u-bar.
inline RingElement dual_generator(const RingElement& u)
{
  return RingElement(u.context(), u.context().rotation() * conjugate(u).value.coeffs());
}

/// Certificate that gcd(g, phi) = 1. Throws NotPrimeSpot with the gcd
/// as witness otherwise.
inline PrimeSpotCertificate is_prime_spot(const RingElement& g)
{
  if (g.is_zero())
    throw ZeroInput("the zero vector is never a prime spot");
  const auto& ctx = g.context();
  Bezout b = xgcd(g.poly(), ctx.phi());
  if (b.gcd.degree() != 0)
    throw NotPrimeSpot("g(x) = " + g.poly().str() + " shares the factor " + b.gcd.str() + " with phi = " +
                           ctx.phi().str() + "; not a prime spot",
                       b.gcd.str());
  RingElement u(ctx, b.u);
  RingElement tg = dual_generator(u);
  std::vector<double> vals;
  for (const auto& w : ctx.roots())
    vals.push_back(std::abs(tg.poly().evaluate(w)));
  double mn = *std::min_element(vals.begin(), vals.end());
  return {g, u, tg, std::move(vals), mn};
}

/// Checks L(H*(b_1)...H*(b_m)) is contained in every L(H*(b_i)). Always
/// true for integer vectors; a fractional factor can break it, e.g.
/// (e_1 / 2)^2 generates Z^n / 4, which is not inside Z^n / 2.
inline bool product_inclusion_check(const std::vector<RingElement>& betas)
{
  if (betas.size() < 2)
    throw DomainError("product inclusion needs at least two vectors");
  QMatrix prod = ideal_matrix(betas.front()).entries();
  for (std::size_t i = 1; i < betas.size(); ++i) {
    RingElement::check_same(betas.front(), betas[i]);
    prod = prod * ideal_matrix(betas[i]).entries();
  }
  for (const auto& b : betas) {
    if (b.is_zero())
      continue; // prod is then zero, and 0 lies in every lattice
    LatticeBasis factor = minimal_cyclic_lattice(b).basis;
    for (std::size_t j = 0; j < prod.cols(); ++j)
      if (!contains(factor, prod.column(j)))
        return false;
  }
  return true;
}

} // namespace idlat

#endif // IDLAT_CYCLIC_HPP
