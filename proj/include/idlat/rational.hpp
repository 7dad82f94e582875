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
#ifndef IDLAT_RATIONAL_HPP
#define IDLAT_RATIONAL_HPP

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace idlat {

using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline double to_double(const Rational& q) { return q.get_d(); }

/// Parses "p", "-p", "p/q". Whitespace around the token is ignored.
inline Rational parse_rational(std::string_view text)
{
  auto b = text.find_first_not_of(" \t\n");
  auto e = text.find_last_not_of(" \t\n");
  if (b == std::string_view::npos)
    throw ParseError("empty rational literal");
  std::string s(text.substr(b, e - b + 1));

  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-')
    ++i;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && s[j] >= '0' && s[j] <= '9')
      ++j;
    return j;
  };
  std::size_t j = digits(i);
  if (j == i)
    throw ParseError("bad rational literal '" + s + "'");
  if (j < s.size()) {
    if (s[j] != '/')
      throw ParseError("bad rational literal '" + s + "'");
    std::size_t k = digits(j + 1);
    if (k == j + 1 || k != s.size())
      throw ParseError("bad rational literal '" + s + "'");
  }
  if (s[0] == '+')
    s.erase(0, 1);

  Rational q;
  if (q.set_str(s, 10) != 0)
    throw ParseError("bad rational literal '" + s + "'");
  if (q.get_den() == 0)
    throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// "p/q" in lowest terms, or "p" when the value is an integer.
inline std::string to_string(const Rational& q)
{
  return q.get_str(10);
}

inline Integer lcm_of_denominators(const QVector& v)
{
  Integer l = 1;
  for (const auto& q : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational& q)
{
  if (q < 0)
    return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Recovers a rational from a double when a convergent with denominator at
/// most max_den reproduces it to rel_tol. Returns nullopt otherwise.
inline std::optional<Rational> rationalize(double x, long max_den = 10000, double rel_tol = 1e-12)
{
  if (!std::isfinite(x))
    return std::nullopt;
  // continued fraction convergents h/k
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(r);
    if (std::fabs(a) > 1e18)
      break;
    Integer ai(a);
    Integer h2 = ai * h1 + h0;
    Integer k2 = ai * k1 + k0;
    if (k2 > max_den)
      break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Rational cand(h1, k1);
    cand.canonicalize();
    if (std::fabs(cand.get_d() - x) <= rel_tol * std::max(1.0, std::fabs(x)))
      return cand;
    double frac = r - a;
    if (frac == 0.0)
      break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

} // namespace idlat

#endif // IDLAT_RATIONAL_HPP
