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
#ifndef IDLAT_ENUMERATE_HPP
#define IDLAT_ENUMERATE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace idlat {

inline constexpr std::size_t default_enumeration_budget = 10'000'000;

/// Fincke-Pohst enumeration of all integer x with (x - t)' G (x - t) <= radius_sq.
///
/// `gram` is the (numerically) positive definite Gram matrix of the basis and
/// `center` the target in basis coordinates. Coordinates are fixed from the
/// last one down; each ranges over its interval in zig-zag order starting at
/// the integer nearest the projected center (nearest remaining integer to c first), so
/// points near the target come first and the visiting order is
/// deterministic. `visit(x, dist_sq)` may return false to
/// stop early. Every tried coordinate value counts against `budget`.
/// Returns the number of nodes visited.
template <class Visit>
std::size_t enumerate_ellipsoid(const DMatrix& gram, std::span<const double> center, double radius_sq,
                                Visit&& visit, std::size_t budget = default_enumeration_budget)
{
  const std::size_t m = gram.rows();
  if (center.size() != m)
    throw DimensionMismatch("enumeration center has wrong dimension");
  if (m == 0 || radius_sq < 0)
    return 0;

  DMatrix r = cholesky_upper(gram);
  std::vector<double> q(m);
  DMatrix mu(m, m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    q[i] = r(i, i) * r(i, i);
    for (std::size_t j = i + 1; j < m; ++j)
      mu(i, j) = r(i, j) / r(i, i);
  }

  std::vector<long> x(m, 0);
  std::size_t nodes = 0;
  bool stop = false;

  auto recurse = [&](auto&& self, std::size_t i, double partial) -> void {
    double c = center[i];
    for (std::size_t j = i + 1; j < m; ++j)
      c -= mu(i, j) * (static_cast<double>(x[j]) - center[j]);
    double rem = radius_sq - partial;
    if (rem < 0)
      return;
    double w = std::sqrt(rem / q[i]);
    double lo_d = std::ceil(c - w), hi_d = std::floor(c + w);
    if (std::fabs(lo_d) > 9e15 || std::fabs(hi_d) > 9e15)
      throw BudgetExceeded("enumeration interval too wide");
    const long lo = static_cast<long>(lo_d), hi = static_cast<long>(hi_d);
    if (lo > hi)
      return;
    const long start = std::clamp(static_cast<long>(std::nearbyint(c)), lo, hi);
    const long span_len = hi - lo + 1;
    long up = start, down = start - 1;
    for (long k = 0; k < span_len && !stop; ++k) {
      long xi;
      // nearest remaining integer to c next; drain one side once the other ends
      bool take_up = up <= hi && (down < lo || static_cast<double>(up) - c <= c - static_cast<double>(down));
      if (take_up)
        xi = up++;
      else
        xi = down--;
      if (++nodes > budget)
        throw BudgetExceeded("lattice enumeration exceeded its budget of " + std::to_string(budget) + " nodes");
      double d = static_cast<double>(xi) - c;
      double p = partial + q[i] * d * d;
      if (p > radius_sq)
        continue;
      x[i] = xi;
      if (i == 0) {
        if (!visit(std::as_const(x), p))
          stop = true;
      } else {
        self(self, i - 1, p);
      }
    }
    x[i] = 0;
  };
  recurse(recurse, m - 1, 0.0);
  return nodes;
}

} // namespace idlat

#endif // IDLAT_ENUMERATE_HPP
