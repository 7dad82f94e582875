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

#include <cmath>
#include <map>
#include <numbers>

#include <idlat/idlat.hpp>

#include "test_support.hpp"

using namespace idlat;
using idlat::testing::Gen;
using idlat::testing::diag_basis;
using idlat::testing::upper_ones;

namespace {

const LatticeBasis kZ = LatticeBasis::identity(1);

// Direct sum of exp(-pi k^2 / s^2) for |k| <= 10.
double rho_z_direct(double s)
{
  double acc = 0;
  for (long k = -10; k <= 10; ++k)
    acc += std::exp(-std::numbers::pi * static_cast<double>(k * k) / (s * s));
  return acc;
}

} // namespace

TEST(GaussSum, Examples)
{
  EXPECT_NEAR(gauss_sum(kZ, 1.0), rho_z_direct(1.0), 1e-14);
  EXPECT_NEAR(gauss_sum(kZ, 1.0), 1.0864348, 1e-7);
  EXPECT_NEAR(gauss_sum(kZ, 0.05), 1.0, 1e-12);
  EXPECT_NEAR(gauss_sum(diag_basis({2}), 2.0), gauss_sum(kZ, 1.0), 1e-14);
}

TEST(GaussSum, ProductLatticeFactorizes)
{
  for (double s : {0.7, 1.0, 1.9}) {
    double z = idlat::testing::theta_z(s);
    EXPECT_NEAR(gauss_sum(LatticeBasis::identity(2), s), z * z, 1e-11 * z * z);
    EXPECT_NEAR(gauss_sum(LatticeBasis::identity(3), s), z * z * z, 1e-11 * z * z * z);
    // a unimodular change of basis does not change the lattice
    EXPECT_NEAR(gauss_sum(upper_ones(3), s), z * z * z, 1e-11 * z * z * z);
  }
}

TEST(GaussSum, ShiftedCenter)
{
  // rho_{s,c}(Z) = sum exp(-pi (k - c)^2 / s^2), oracle summed directly
  for (double c : {0.25, 0.5, 3.75}) {
    double direct = 0;
    for (long k = -40; k <= 40; ++k)
      direct += std::exp(-std::numbers::pi * (static_cast<double>(k) - c) * (static_cast<double>(k) - c) / 1.44);
    Rational cq = *rationalize(c);
    EXPECT_NEAR(gauss_sum(kZ, 1.2, QVector{cq}), direct, 1e-12 * direct);
  }
}

TEST(GaussSum, TailBoundIsReported)
{
  auto r = gauss_sum_detailed(LatticeBasis::identity(2), 1.5, QVector(2));
  EXPECT_LE(r.tail_bound, 1e-12 * r.value);
  EXPECT_GE(r.radius, 1.5 * 6);
  EXPECT_FALSE(r.exceeded);
  EXPECT_THROW(gauss_sum(kZ, 0.0), DomainError);
  EXPECT_THROW(gauss_sum(LatticeBasis::from_columns({{1, 0}}), 1.0), RankDeficient);
}

TEST(GaussSum, DualSumStrictlyDecreasing)
{
  Gen gen(41);
  for (int t = 0; t < 5; ++t) {
    auto L = gen.full_rank_basis(2);
    auto D = dual_basis(L);
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 20; ++i) {
      double s = 0.2 + 0.15 * i;
      double v = gauss_sum(D, 1 / s);
      EXPECT_LT(v, prev);
      prev = v;
    }
  }
}

TEST(EtaNumeric, IntegersAgainstScalarOracle)
{
  // x + x^4 + x^9 + ... = 1/4 with x = exp(-pi s^2) gives s = 0.667830...
  EXPECT_NEAR(eta_numeric(kZ, 0.5), idlat::testing::eta_z(0.5), 1e-8);
  EXPECT_NEAR(eta_numeric(kZ, 0.5), 0.667830, 1e-6);
  for (double eps : {0.01, 0.1, 1.0})
    EXPECT_NEAR(eta_numeric(kZ, eps), idlat::testing::eta_z(eps), 1e-8);
}

TEST(EtaNumeric, ScalingLaw)
{
  Gen gen(42);
  for (int t = 0; t < 4; ++t) {
    auto L = gen.full_rank_basis(1 + static_cast<std::size_t>(t) % 2);
    EXPECT_NEAR(eta_numeric(L.scaled(2), 0.25), 2 * eta_numeric(L, 0.25), 1e-6);
  }
  EXPECT_NEAR(eta_numeric(diag_basis({2}), 0.5), 2 * eta_numeric(kZ, 0.5), 1e-6);
}

TEST(EtaNumeric, ZSquaredBelowLambdaBound)
{
  auto Z2 = LatticeBasis::identity(2);
  double eta = eta_numeric(Z2, 0.25);
  EXPECT_LE(eta, std::sqrt(2.0));
  // Z^2 is a product: rho_{1/s}(Z)^2 = 1.25 at the answer
  double z = idlat::testing::theta_z(1 / eta);
  EXPECT_NEAR(z * z, 1.25, 1e-7);
}

TEST(EtaNumeric, SmallEpsilonGrowsTheBracket)
{
  double eta = eta_numeric(kZ, 1e-12);
  EXPECT_GT(eta, bound_lambda(kZ) + 1); // above the default upper end
  EXPECT_NEAR(eta, idlat::testing::eta_z(1e-12), 1e-7);
  // only k = +-1 matter here: 2 exp(-pi s^2) = 1e-12
  EXPECT_NEAR(eta, std::sqrt(std::log(2e12) / std::numbers::pi), 1e-7);
  EXPECT_THROW(eta_numeric(kZ, 0.0), DomainError);
  EXPECT_THROW(eta_numeric(kZ, 1e6), BracketFailure);
}

TEST(BoundLambda, Examples)
{
  EXPECT_NEAR(bound_lambda(LatticeBasis::identity(4)), 2.0, 1e-12);
  EXPECT_NEAR(bound_lambda(diag_basis({2})), 2.0, 1e-12);
  EXPECT_NEAR(bound_lambda(upper_ones(3)), std::sqrt(3.0), 1e-12);
}

TEST(BoundGs, Examples)
{
  EXPECT_NEAR(bound_gs(upper_ones(3)), 3.0, 1e-12);
  EXPECT_NEAR(bound_gs(upper_ones(4)), 4.0, 1e-12);
  EXPECT_NEAR(bound_gs(LatticeBasis::identity(5)), std::sqrt(5.0), 1e-12);
}

TEST(BoundTg, Examples)
{
  auto c3 = cyclic_context(3);
  auto b3 = bound_tg(upper_ones(3), RingElement::unit_vector(c3, 3));
  EXPECT_NEAR(b3.value, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(b3.certificate.tg_min, 1.0, 1e-12);

  // n = 4, g = x - 2: min |T_g(theta)| = 1/3, so the bound is 2 * 3
  auto c4 = cyclic_context(4);
  auto b4 = bound_tg(upper_ones(4), RingElement(c4, QVector{-2, 1, 0, 0}));
  EXPECT_NEAR(b4.value, 6.0, 1e-12);
  EXPECT_GT(b4.value, bound_gs(upper_ones(4)));

  for (std::size_t n : {2, 5}) {
    auto c = cyclic_context(n);
    auto b = bound_tg(LatticeBasis::identity(n), RingElement::one(c));
    EXPECT_EQ(b.certificate.tg, RingElement::one(c));
    EXPECT_NEAR(b.value, std::sqrt(static_cast<double>(n)), 1e-12);
  }
}

TEST(BoundTg, Preconditions)
{
  auto t = idlat::testing::trinomial_context(3);
  EXPECT_THROW(bound_tg(LatticeBasis::identity(3), RingElement::one(t)), UnsupportedModulus);
  auto c3 = cyclic_context(3);
  EXPECT_THROW(bound_tg(LatticeBasis::identity(3), RingElement(c3, Poly{1, 1, 1})), NotPrimeSpot);
  EXPECT_THROW(bound_tg(LatticeBasis::identity(3).scaled(2), RingElement::one(c3)), NotMember);
  EXPECT_THROW(bound_tg(LatticeBasis::identity(3), RingElement(c3, QVector{Rational(1, 2), 0, 0})), NotMember);
}

TEST(BoundTg, LambdaRouteAndSpectralConsistency)
{
  // lambda_1(L(H*(g))*) >= min |T_g(theta_i)|, and the smallest eigenvalue of
  // H*(T_g)' H*(T_g) is that minimum squared.
  Gen gen(43);
  for (std::size_t n : {2, 3, 4}) {
    auto c = cyclic_context(n);
    for (int t = 0; t < 10; ++t) {
      RingElement g = gen.integer_prime_spot(c, 2);
      auto cert = is_prime_spot(g);
      LatticeBasis Lg(ideal_matrix(g).entries());
      EXPECT_GE(min_distance(dual_basis(Lg)).length, cert.tg_min - 1e-9);
      QMatrix h = ideal_matrix(cert.tg).entries();
      auto ev = symmetric_eigenvalues(to_double(h.transpose() * h));
      EXPECT_NEAR(ev.front(), cert.tg_min * cert.tg_min, 1e-6 * std::max(1.0, ev.front()));
    }
  }
}

TEST(SmoothingReport, ShiftThree)
{
  auto c3 = cyclic_context(3);
  auto r = smoothing_report(upper_ones(3), RingElement::unit_vector(c3, 3));
  EXPECT_EQ(r.n, 3u);
  EXPECT_DOUBLE_EQ(r.epsilon, 0.125);
  EXPECT_NEAR(r.bound_lambda, std::sqrt(3.0), 1e-9);
  ASSERT_TRUE(r.bound_tg);
  EXPECT_NEAR(*r.bound_tg, std::sqrt(3.0), 1e-9);
  EXPECT_NEAR(r.bound_gs, 3.0, 1e-9);
  EXPECT_TRUE(*r.tg_beats_gs);
  EXPECT_LE(r.eta_numeric, r.bound_lambda + 1e-6);
  // Z^3 is a product lattice: eta solves theta(1/s)^3 = 1 + eps
  double z = idlat::testing::theta_z(1 / r.eta_numeric);
  EXPECT_NEAR(z * z * z, 1.125, 1e-7);
  EXPECT_GT(r.truncation_radius, 0);
}

TEST(SmoothingReport, WithoutGenerator)
{
  auto r = smoothing_report(LatticeBasis::identity(2), std::nullopt, 0.3);
  EXPECT_FALSE(r.bound_tg);
  EXPECT_FALSE(r.certificate);
  EXPECT_FALSE(r.tg_beats_gs);
  EXPECT_DOUBLE_EQ(r.epsilon, 0.3);
}

TEST(SmoothingProperties, BoundChainOnRandomCyclicLattices)
{
  Gen gen(44);
  int done = 0;
  for (int t = 0; t < 40 && done < 15; ++t) {
    auto c = cyclic_context(2 + static_cast<std::size_t>(t) % 3);
    RingElement g = gen.integer_prime_spot(c, 2);
    auto L = module_to_lattice({g, gen.integer_element(c, 2)}).basis;
    auto r = smoothing_report(L, g);
    EXPECT_LE(r.eta_numeric, r.bound_lambda + 1e-6);
    EXPECT_LE(r.eta_numeric, *r.bound_tg + 1e-6);
    EXPECT_LE(r.eta_numeric, r.bound_gs + 1e-6);
    EXPECT_LE(r.bound_lambda, *r.bound_tg + 1e-6);
    ++done;
  }
}

TEST(SmoothingProperties, MonotoneUnderSublattices)
{
  Gen gen(45);
  for (int t = 0; t < 6; ++t) {
    auto L = gen.full_rank_basis(1 + static_cast<std::size_t>(t) % 2);
    for (int k : {2, 3})
      for (double eps : {std::ldexp(1.0, -static_cast<int>(L.n())), 0.1, 1.0})
        EXPECT_LE(eta_numeric(L, eps), eta_numeric(L.scaled(k), eps) + 1e-6);
  }
}

TEST(Sampler, ConcentratedWidthGivesOrigin)
{
  auto xs = discrete_gauss_sample(kZ, {0.05, QVector{0}}, 1, 1000);
  for (const auto& x : xs)
    EXPECT_EQ(x[0], 0);
}

TEST(Sampler, SeedDeterminism)
{
  auto L = upper_ones(2);
  GaussParams p{1.3, QVector{Rational(1, 3), 0}};
  EXPECT_EQ(discrete_gauss_sample(L, p, 7, 200), discrete_gauss_sample(L, p, 7, 200));
  EXPECT_NE(discrete_gauss_sample(L, p, 7, 200), discrete_gauss_sample(L, p, 8, 200));
  for (const auto& x : discrete_gauss_sample(L, p, 7, 50))
    EXPECT_TRUE(contains(L, x));
}

TEST(Sampler, FrequencyOfOriginOnIntegers)
{
  const std::size_t N = 100000;
  auto xs = discrete_gauss_sample(kZ, {1.0, QVector{0}}, 2024, N);
  double p = 1 / rho_z_direct(1.0);
  EXPECT_NEAR(p, 0.9204, 1e-4);
  std::size_t zeros = 0;
  double sum = 0, sq = 0;
  for (const auto& x : xs) {
    double v = x[0].get_d();
    zeros += v == 0;
    sum += v;
    sq += v * v;
  }
  double freq = static_cast<double>(zeros) / N;
  EXPECT_NEAR(freq, p, 3 * std::sqrt(p * (1 - p) / N));
  double sigma = std::sqrt(sq / N);
  EXPECT_LE(std::fabs(sum / N), 4 * sigma / std::sqrt(static_cast<double>(N)));
}

TEST(Sampler, MatchesExactDistributionInTwoDimensions)
{
  // chi-square-free check: each of the five most likely points lands within
  // 4 standard errors of its exact probability.
  auto L = LatticeBasis::from_columns({{1, 0}, {Rational(1, 2), 1}});
  GaussParams p{1.1, QVector{0, 0}};
  const std::size_t N = 50000;
  auto xs = discrete_gauss_sample(L, p, 99, N);
  std::map<std::pair<double, double>, std::size_t> freq;
  for (const auto& x : xs)
    ++freq[{x[0].get_d(), x[1].get_d()}];
  double total = gauss_sum(L, 1.1);
  for (auto pt : std::vector<std::pair<double, double>>{{0, 0}, {1, 0}, {-1, 0}, {0.5, 1}, {-0.5, -1}}) {
    double prob = std::exp(-std::numbers::pi * (pt.first * pt.first + pt.second * pt.second) / 1.21) / total;
    double f = static_cast<double>(freq[pt]) / N;
    EXPECT_NEAR(f, prob, 4 * std::sqrt(prob * (1 - prob) / N)) << pt.first << "," << pt.second;
  }
}

TEST(StatisticalDistance, Examples)
{
  auto far = statistical_distance_check(kZ, 3.0, 10000, 1);
  EXPECT_LT(far.delta_hat, 1e-4);
  EXPECT_TRUE(far.pass);

  auto at = statistical_distance_check(kZ, eta_numeric(kZ, 0.5), 10000, 1);
  EXPECT_LE(at.delta_hat, 0.25 + 1e-3);
  EXPECT_NEAR(at.epsilon, 0.5, 1e-6);
  EXPECT_TRUE(at.pass);

  auto narrow = statistical_distance_check(kZ, 0.05, 10000, 1);
  EXPECT_GT(narrow.delta_hat, 0.5);
  EXPECT_FALSE(narrow.pass);
}

TEST(StatisticalDistance, FoldedDensityOracleOnIntegers)
{
  // TV distance by direct summation of the folded density on a fine grid
  double s = 0.8;
  const int N = 20000;
  double acc = 0;
  for (int i = 0; i < N; ++i) {
    double u = (i + 0.5) / N, f = 0;
    for (long k = -20; k <= 20; ++k)
      f += std::exp(-std::numbers::pi * (u + k) * (u + k) / (s * s)) / s;
    acc += std::fabs(f - 1);
  }
  double oracle = 0.5 * acc / N;
  EXPECT_NEAR(statistical_distance_check(kZ, s, 10000, 3).delta_hat, oracle, 1e-6);
}

TEST(StatisticalDistance, TwoDimensionsAndLimits)
{
  auto Z2 = LatticeBasis::identity(2);
  auto r = statistical_distance_check(Z2, eta_numeric(Z2, 0.25), 100, 5);
  EXPECT_LE(r.delta_hat, r.bound + 1e-3);
  EXPECT_TRUE(r.pass);
  EXPECT_THROW(statistical_distance_check(LatticeBasis::identity(3), 1.0, 10, 1), UnsupportedDimension);
}
