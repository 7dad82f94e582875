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
#ifndef IDLAT_POLY_HPP
#define IDLAT_POLY_HPP

#include <complex>
#include <initializer_list>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace idlat {

/// Univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial stores no coefficients and has degree -1.
class Poly
{
public:
  Poly() = default;
  explicit Poly(QVector coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs)
  {
    for (long x : coeffs)
      c_.emplace_back(x);
    trim();
  }

  static Poly constant(const Rational& a) { return Poly(QVector{a}); }

  /// x^k
  static Poly monomial(std::size_t k, const Rational& a = 1)
  {
    QVector c(k + 1);
    c[k] = a;
    return Poly(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  /// Coefficient of x^k, zero beyond the degree.
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const QVector& coeffs() const noexcept { return c_; }

  /// Coefficients padded with zeros to exactly `len` entries.
  QVector padded(std::size_t len) const
  {
    QVector v(len);
    for (std::size_t i = 0; i < c_.size() && i < len; ++i)
      v[i] = c_[i];
    return v;
  }

  const Rational& leading() const
  {
    if (c_.empty())
      throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  bool is_integral() const
  {
    for (const auto& q : c_)
      if (!is_integer(q))
        return false;
    return true;
  }

  Poly monic() const
  {
    if (is_zero())
      return *this;
    Poly p = *this;
    Rational l = leading();
    for (auto& q : p.c_)
      q /= l;
    return p;
  }

  Poly derivative() const
  {
    if (c_.size() <= 1)
      return Poly();
    QVector d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
  }

  template <class T>
  T evaluate(const T& x) const
  {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + T(it->get_d());
    return acc;
  }

  Rational evaluate(const Rational& x) const
  {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  friend Poly operator+(const Poly& a, const Poly& b)
  {
    QVector c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a[i] + b[i];
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a) { return Poly() - a; }

  friend Poly operator-(const Poly& a, const Poly& b)
  {
    QVector c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a[i] - b[i];
    return Poly(std::move(c));
  }

  friend Poly operator*(const Poly& a, const Poly& b)
  {
    if (a.is_zero() || b.is_zero())
      return Poly();
    QVector c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }

  friend Poly operator*(const Rational& s, const Poly& a)
  {
    Poly p = a;
    for (auto& q : p.c_)
      q *= s;
    p.trim();
    return p;
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
  {
    if (b.is_zero())
      throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree())
      return {Poly(), a};
    QVector r = a.c_;
    QVector q(a.c_.size() - b.c_.size() + 1);
    const Rational& lb = b.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      Rational t = r[k + b.c_.size() - 1] / lb;
      q[k] = t;
      if (t == 0)
        continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[k + j] -= t * b.c_[j];
    }
    r.resize(b.c_.size() - 1);
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  /// Human-readable form such as "x^3 - 2/7*x + 1".
  std::string str() const
  {
    if (is_zero())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      Rational a = c_[k];
      if (a == 0)
        continue;
      bool neg = a < 0;
      Rational mag = neg ? Rational(-a) : a;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      if (k == 0) {
        os << to_string(mag);
        continue;
      }
      if (mag != 1)
        os << to_string(mag) << "*";
      os << "x";
      if (k > 1)
        os << "^" << k;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }

  QVector c_;
};

struct Bezout
{
  Poly gcd; ///< monic, or zero never (inputs not both zero)
  Poly u;
  Poly v;
};

/// Extended Euclid over Q: u*a + v*b = gcd(a, b), gcd monic.
inline Bezout xgcd(const Poly& a, const Poly& b)
{
  if (a.is_zero() && b.is_zero())
    throw ZeroInput("xgcd of two zero polynomials");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly{1}, s1 = Poly();
  Poly t0 = Poly(), t1 = Poly{1};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational l = r0.leading();
  Rational inv = 1 / l;
  return {inv * r0, inv * s0, inv * t0};
}

inline Poly gcd(const Poly& a, const Poly& b) { return xgcd(a, b).gcd; }

/// True iff gcd(phi, phi') is constant, i.e. phi has no repeated complex root.
inline bool is_squarefree(const Poly& phi)
{
  if (phi.is_zero())
    throw ZeroInput("squarefree test of the zero polynomial");
  if (phi.degree() <= 1)
    return true;
  return gcd(phi, phi.derivative()).degree() == 0;
}

/// Monic product of (x - r) over complex roots, lowest degree first.
inline std::vector<std::complex<double>> poly_from_roots(const std::vector<std::complex<double>>& roots)
{
  std::vector<std::complex<double>> c{1.0};
  for (const auto& r : roots) {
    std::vector<std::complex<double>> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

namespace detail {

/// If p = x^n + c0 returns -c0 (so p = x^n - r), else nullopt.
inline std::optional<Rational> binomial_root_value(const Poly& p)
{
  if (!p.is_monic() || p.degree() < 1)
    return std::nullopt;
  for (int k = 1; k < p.degree(); ++k)
    if (p[k] != 0)
      return std::nullopt;
  return Rational(-p[0]);
}

} // namespace detail

struct RootOptions
{
  double tolerance = 1e-12;
  int max_iterations = 200;
};

/// Complex roots of a squarefree polynomial. Binomials x^n - r use the closed
/// form r^(1/n) * e^(2 pi i k / n), k = 0..n-1 (for r = 1, theta_1 = 1 first).
/// Anything else goes through Aberth-Ehrlich simultaneous iteration followed
/// by Newton polishing. The residual |p(w)| is checked relative to the
/// coefficient magnitudes sum |p_k| |w|^k.
inline std::vector<std::complex<double>> complex_roots(const Poly& p, RootOptions opt = {})
{
  using cd = std::complex<double>;
  if (p.degree() < 1)
    return {};
  Poly m = p.monic();
  int n = m.degree();

  auto residual_ok = [&](cd w) {
    double scale = 0, wk = 1;
    for (int k = 0; k <= n; ++k, wk *= std::abs(w))
      scale += std::fabs(m[k].get_d()) * wk;
    return std::abs(m.evaluate(w)) <= opt.tolerance * std::max(1.0, scale);
  };

  if (auto r = detail::binomial_root_value(m)) {
    double rv = r->get_d();
    double mag = std::pow(std::fabs(rv), 1.0 / n);
    double arg = rv < 0 ? std::numbers::pi : 0.0;
    std::vector<cd> roots;
    for (int k = 0; k < n; ++k) {
      double ang = (arg + 2 * std::numbers::pi * k) / n;
      cd w = std::polar(mag, ang);
      // snap the exactly real/imaginary cases for clean output
      if (std::fabs(w.imag()) < 1e-15 * mag)
        w = cd(w.real(), 0.0);
      if (std::fabs(w.real()) < 1e-15 * mag)
        w = cd(0.0, w.imag());
      roots.push_back(w);
    }
    return roots;
  }

  Poly dm = m.derivative();
  // Cauchy bound for the initial circle
  double bound = 0;
  for (int k = 0; k < n; ++k)
    bound = std::max(bound, std::fabs(m[k].get_d()));
  bound += 1;
  std::vector<cd> z(n);
  for (int k = 0; k < n; ++k)
    z[k] = std::polar(0.5 * bound, 2 * std::numbers::pi * k / n + 0.4);

  bool converged = false;
  for (int it = 0; it < opt.max_iterations && !converged; ++it) {
    converged = true;
    for (int k = 0; k < n; ++k) {
      cd pv = m.evaluate(z[k]);
      cd dv = dm.evaluate(z[k]);
      cd ratio = pv / dv;
      cd sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k)
          sum += 1.0 / (z[k] - z[j]);
      cd w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        w = 0;
      z[k] -= w;
      if (std::abs(w) > 1e-15 * std::max(1.0, std::abs(z[k])))
        converged = false;
    }
  }
  for (auto& w : z)
    for (int it = 0; it < 3; ++it) {
      cd d = dm.evaluate(w);
      if (std::abs(d) == 0)
        break;
      w -= m.evaluate(w) / d;
    }
  for (auto& w : z) {
    if (!residual_ok(w))
      throw IterationFailure("root finding did not converge for " + p.str());
    if (std::fabs(w.imag()) < 1e-14 * std::max(1.0, std::abs(w)))
      w = cd(w.real(), 0.0);
  }
  return z;
}

} // namespace idlat

#endif // IDLAT_POLY_HPP
