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
#ifndef IDLAT_SMOOTHING_HPP
#define IDLAT_SMOOTHING_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "cyclic.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "ideal_matrix.hpp"
#include "lattice.hpp"

namespace idlat {

/// Gaussian width s > 0 and center c.
struct GaussParams
{
  double s;
  QVector c;
};

struct GaussSumOptions
{
  double rel_tol = 1e-12;
  std::size_t budget = default_enumeration_budget;
};

struct GaussSumResult
{
  double value;
  double radius;      ///< enumeration radius |x - c| <= radius
  double tail_bound;  ///< certified bound on the discarded mass
  std::size_t points; ///< lattice points summed
  bool exceeded = false; ///< stopped early once value - 1 passed the threshold
  double excess = 0;     ///< value - 1, free of cancellation (the mass off the origin for centered sums)
};

namespace detail {

/// Neumaier compensated summation.
class CompensatedSum
{
public:
  void add(double x)
  {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }
  /// value() - a without cancellation when a is close to the running sum.
  double value_minus(double a) const { return (sum_ - a) + comp_; }

private:
  double sum_ = 0;
  double comp_ = 0;
};

/// Banaszczyk: for t >= 1/sqrt(2 pi), the mass of rho_s outside the ball of
/// radius t s sqrt(n) around any center is at most 2 C^n rho_s(L) with
/// C = t sqrt(2 pi e) e^(-pi t^2).
inline double tail_factor(double radius, double s, std::size_t n)
{
  double t = radius / (s * std::sqrt(static_cast<double>(n)));
  if (t < 1 / std::sqrt(2 * std::numbers::pi))
    return std::numeric_limits<double>::infinity();
  double c = t * std::sqrt(2 * std::numbers::pi * std::numbers::e) * std::exp(-std::numbers::pi * t * t);
  return 2 * std::pow(c, static_cast<double>(n));
}

inline std::vector<double> center_coordinates(const LatticeBasis& L, const QVector& c)
{
  if (c.size() != L.n())
    throw DimensionMismatch("Gaussian center has wrong dimension");
  std::vector<double> t(L.m(), 0.0);
  bool zero = std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; });
  if (zero)
    return t;
  auto x = solve(L.matrix(), c);
  if (!x)
    throw DimensionMismatch("Gaussian center is outside the lattice span");
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = (*x)[i].get_d();
  return t;
}

/// One truncated pass: sum over |x - c| <= radius, or stop once the sum
/// minus 1 is above `stop_excess`.
inline GaussSumResult truncated_gauss_sum(const LatticeBasis& L, double s, const std::vector<double>& center,
                                          double radius, std::optional<double> stop_excess, std::size_t budget)
{
  DMatrix g = to_double(L.gram());
  CompensatedSum acc;
  std::size_t pts = 0;
  bool exceeded = false;
  const double k = std::numbers::pi / (s * s);
  double r2 = radius * radius;
  enumerate_ellipsoid(
      g, center, r2 * (1 + 1e-12),
      [&](const std::vector<long>&, double d2) {
        acc.add(std::exp(-k * d2));
        ++pts;
        if (stop_excess && acc.value_minus(1.0) > *stop_excess) {
          exceeded = true;
          return false;
        }
        return true;
      },
      budget);
  return {acc.value(), radius, 0.0, pts, exceeded, acc.value_minus(1.0)};
}

} // namespace detail

/// rho_{s,c}(L) = sum over x in L of exp(-pi |x - c|^2 / s^2).
///
/// Starts at radius s * max(sqrt(n), 6) and grows it by 25% until the
/// certified tail (relative to rho_s(L), itself bounded above by the
/// truncated origin-centered sum) is below rel_tol times the accumulated
/// value. With `stop_excess` set the caller only needs to know whether
/// rho - 1 exceeds it: the pass returns as soon as the partial sum does (the
/// sum only grows), or once the tail bound proves it cannot.
inline GaussSumResult gauss_sum_detailed(const LatticeBasis& L, double s, const QVector& c,
                                         GaussSumOptions opt = {}, std::optional<double> stop_excess = std::nullopt)
{
  require_full_rank(L, "Gaussian sum");
  if (!(s > 0))
    throw DomainError("Gaussian width must be positive");
  const std::size_t n = L.n();
  std::vector<double> t = detail::center_coordinates(L, c);
  bool centered = std::all_of(t.begin(), t.end(), [](double v) { return v == 0.0; });
  std::vector<double> origin(n, 0.0);

  double radius = s * std::max(std::sqrt(static_cast<double>(n)), 6.0);
  for (int attempt = 0; attempt < 40; ++attempt, radius *= 1.25) {
    auto res = detail::truncated_gauss_sum(L, s, t, radius, stop_excess, opt.budget);
    if (res.exceeded)
      return res;
    double f = detail::tail_factor(radius, s, n);
    if (!(f < 0.5))
      continue;
    double rho0 = centered ? res.value : detail::truncated_gauss_sum(L, s, origin, radius, {}, opt.budget).value;
    double tail = f * rho0 / (1 - f);
    bool done = stop_excess ? res.excess + tail <= *stop_excess || tail <= opt.rel_tol * std::fabs(res.excess)
                            : tail <= opt.rel_tol * res.value;
    if (done) {
      res.tail_bound = tail;
      return res;
    }
  }
  throw BudgetExceeded("Gaussian sum tail did not fall below tolerance");
}

inline double gauss_sum(const LatticeBasis& L, double s, const QVector& c, double rel_tol = 1e-12)
{
  return gauss_sum_detailed(L, s, c, {rel_tol}).value;
}

inline double gauss_sum(const LatticeBasis& L, double s, double rel_tol = 1e-12)
{
  return gauss_sum(L, s, QVector(L.n()), rel_tol);
}

/// sqrt(n) / lambda_1(L*).
inline double bound_lambda(const LatticeBasis& L)
{
  require_full_rank(L, "bound_lambda");
  ShortestVector sv = min_distance(dual_basis(L));
  return std::sqrt(static_cast<double>(L.n()) / sv.sq_length.get_d());
}

/// sqrt(n) / |B0*| with B0* the Gram-Schmidt vectors of the dual basis.
inline double bound_gs(const LatticeBasis& L)
{
  require_full_rank(L, "bound_gs");
  GramSchmidt gs = gram_schmidt(dual_basis(L));
  return std::sqrt(static_cast<double>(L.n()) / gs.min_sq_norm.get_d());
}

struct TgBound
{
  double value;
  PrimeSpotCertificate certificate;
};

/// sqrt(n) / min_i |T_g(theta_i)| for a prime spot g of a full-rank lattice
/// closed under the cyclic shift (phi = x^n - 1).
inline TgBound bound_tg(const LatticeBasis& L, const RingElement& g)
{
  const auto& ctx = g.context();
  require_cyclotomic_shift(ctx, "bound_tg");
  require_full_rank(L, "bound_tg");
  if (L.n() != ctx.n())
    throw DimensionMismatch("lattice dimension does not match phi");
  PrimeSpotCertificate cert = is_prime_spot(g);
  if (!contains(L, g.coeffs()))
    throw NotMember("prime spot g = " + g.poly().str() + " is not a lattice vector");
  double v = std::sqrt(static_cast<double>(ctx.n())) / cert.tg_min;
  return {v, std::move(cert)};
}

inline TgBound bound_tg(const CyclicLattice& L, const RingElement& g) { return bound_tg(L.basis, g); }

struct EtaOptions
{
  double tol = 1e-9;
  double lower = 1e-4;
  GaussSumOptions sum;
};

/// Smallest s with rho_{1/s}(L*) <= 1 + epsilon, by bisection on s over
/// [1e-4, bound_lambda + 1]. The upper end is doubled if it does not yet
/// satisfy the inequality (possible only for epsilon < 2^-n).
inline double eta_numeric(const LatticeBasis& L, double epsilon, EtaOptions opt = {})
{
  require_full_rank(L, "eta_numeric");
  if (!(epsilon > 0))
    throw DomainError("epsilon must be positive");
  LatticeBasis dual = dual_basis(L);
  QVector origin(L.n());
  // compares rho_{1/s}(L*) - 1 with epsilon directly, so tiny epsilon keeps
  // its relative precision
  auto smooth_enough = [&](double s) {
    return !gauss_sum_detailed(dual, 1 / s, origin, opt.sum, epsilon).exceeded;
  };

  double lo = opt.lower;
  double hi = bound_lambda(L) + 1;
  if (smooth_enough(lo))
    throw BracketFailure("rho_{1/s}(L*) <= 1 + epsilon already at s = " + std::to_string(lo));
  int grow = 0;
  while (!smooth_enough(hi)) {
    lo = hi;
    hi *= 2;
    if (++grow > 60)
      throw BracketFailure("no upper bracket for epsilon = " + std::to_string(epsilon));
  }
  while (hi - lo > opt.tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    if (smooth_enough(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

struct SmoothingReport
{
  std::size_t n;
  double epsilon;
  double eta_numeric;
  double bound_lambda;
  std::optional<double> bound_tg;
  double bound_gs;
  std::optional<PrimeSpotCertificate> certificate;
  double truncation_radius;
  /// bound_tg <= bound_gs; recorded per instance, never asserted.
  std::optional<bool> tg_beats_gs;
};

/// All three upper bounds plus the numeric value. `epsilon` defaults to
/// 2^-n; the bounds are always for 2^-n.
inline SmoothingReport smoothing_report(const LatticeBasis& L, const std::optional<RingElement>& g = std::nullopt,
                                        std::optional<double> epsilon = std::nullopt, EtaOptions opt = {})
{
  require_full_rank(L, "smoothing report");
  SmoothingReport r{};
  r.n = L.n();
  r.epsilon = epsilon.value_or(std::ldexp(1.0, -static_cast<int>(L.n())));
  r.eta_numeric = eta_numeric(L, r.epsilon, opt);
  r.bound_lambda = bound_lambda(L);
  r.bound_gs = bound_gs(L);
  if (g) {
    TgBound tb = bound_tg(L, *g);
    r.bound_tg = tb.value;
    r.certificate = std::move(tb.certificate);
    r.tg_beats_gs = *r.bound_tg <= r.bound_gs;
  }
  r.truncation_radius = gauss_sum_detailed(dual_basis(L), 1 / r.eta_numeric, QVector(L.n()), opt.sum).radius;
  return r;
}

/// Exact discrete Gaussian D_{L,s,c}: every lattice point inside the
/// certified truncation radius, weighted by rho_{s,c}, sampled by inverse CDF.
class DiscreteGaussianSampler
{
public:
  DiscreteGaussianSampler(const LatticeBasis& L, GaussParams params, GaussSumOptions opt = {})
      : lattice_(L), params_(std::move(params))
  {
    auto sum = gauss_sum_detailed(L, params_.s, params_.c, opt);
    radius_ = sum.radius;
    std::vector<double> t = detail::center_coordinates(L, params_.c);
    const double k = std::numbers::pi / (params_.s * params_.s);
    double acc = 0;
    enumerate_ellipsoid(
        to_double(L.gram()), t, radius_ * radius_ * (1 + 1e-12),
        [&](const std::vector<long>& x, double d2) {
          coords_.push_back(x);
          acc += std::exp(-k * d2);
          cdf_.push_back(acc);
          return true;
        },
        opt.budget);
    total_ = acc;
  }

  std::size_t support_size() const noexcept { return coords_.size(); }
  double normalizer() const noexcept { return total_; }

  /// Coefficient vector of one sample; u in [0, 1).
  const std::vector<long>& pick(double u) const
  {
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u * total_);
    if (it == cdf_.end())
      --it;
    return coords_[static_cast<std::size_t>(it - cdf_.begin())];
  }

  template <class Rng>
  QVector sample(Rng& rng) const
  {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lattice_.point(pick(u));
  }

private:
  LatticeBasis lattice_;
  GaussParams params_;
  double radius_ = 0;
  double total_ = 0;
  std::vector<std::vector<long>> coords_;
  std::vector<double> cdf_;
};

/// `count` samples from D_{L,s,c} driven by mt19937_64(seed).
inline std::vector<QVector> discrete_gauss_sample(const LatticeBasis& L, const GaussParams& params, std::uint64_t seed,
                                                  std::size_t count)
{
  DiscreteGaussianSampler sampler(L, params);
  std::mt19937_64 rng(seed);
  std::vector<QVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(sampler.sample(rng));
  return out;
}

struct StatisticalDistance
{
  double delta_hat;          ///< total variation to uniform on P(L)
  double epsilon;            ///< rho_{1/s}(L*) - 1
  double bound;              ///< epsilon / 2
  double quadrature_change;  ///< |delta(N) - delta(N/2)|, a quadrature error estimate
  bool pass;
};

/// Folds the continuous Gaussian D_s (density rho_s(x) / s^n) into the
/// fundamental parallelepiped P(L) and measures its total-variation distance
/// to the uniform density 1 / d(L) by midpoint quadrature with `grid` points
/// per axis, randomly shifted by `seed`. The guarantee delta <= epsilon / 2
/// is meaningful only for epsilon < 1, so pass requires both.
inline StatisticalDistance statistical_distance_check(const LatticeBasis& L, double s, std::size_t grid,
                                                      std::uint64_t seed)
{
  require_full_rank(L, "statistical distance check");
  const std::size_t n = L.n();
  if (n < 1 || n > 2)
    throw UnsupportedDimension("statistical distance check supports n <= 2, got n = " + std::to_string(n));
  if (grid < 2)
    throw DomainError("quadrature grid needs at least 2 points per axis");

  const double det = std::sqrt(L.det_gram().get_d());
  const double norm = std::pow(s, static_cast<double>(n));
  const double k = std::numbers::pi / (s * s);
  const DMatrix g = to_double(L.gram());

  double radius = s * std::max(std::sqrt(static_cast<double>(n)), 6.0);
  while (detail::tail_factor(radius, s, n) > 1e-15)
    radius *= 1.25;
  const double r2 = radius * radius;

  std::mt19937_64 rng(seed);
  std::vector<double> shift(n);
  for (auto& v : shift)
    v = static_cast<double>(rng() >> 11) * 0x1.0p-53;

  auto folded = [&](const std::vector<double>& u) {
    // sum over v in L of rho_s(B u + v) = sum over x of rho_s(B (x - (-u)))
    std::vector<double> center(n);
    for (std::size_t i = 0; i < n; ++i)
      center[i] = -u[i];
    detail::CompensatedSum acc;
    enumerate_ellipsoid(g, center, r2, [&](const std::vector<long>&, double d2) {
      acc.add(std::exp(-k * d2));
      return true;
    });
    return acc.value() / norm;
  };

  auto tv = [&](std::size_t per_axis) {
    detail::CompensatedSum acc;
    std::vector<double> u(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
      total *= per_axis;
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = 0; i < n; ++i) {
        u[i] = (static_cast<double>(rest % per_axis) + shift[i]) / static_cast<double>(per_axis);
        rest /= per_axis;
      }
      acc.add(std::fabs(folded(u) - 1 / det));
    }
    return 0.5 * det * acc.value() / static_cast<double>(total);
  };

  StatisticalDistance out{};
  out.delta_hat = tv(grid);
  out.quadrature_change = std::fabs(out.delta_hat - tv(std::max<std::size_t>(2, grid / 2)));
  out.epsilon = gauss_sum_detailed(dual_basis(L), 1 / s, QVector(n)).excess;
  out.bound = out.epsilon / 2;
  out.pass = out.epsilon < 1 && out.delta_hat <= out.bound + 1e-3;
  return out;
}

} // namespace idlat

#endif // IDLAT_SMOOTHING_HPP
