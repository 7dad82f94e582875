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
#ifndef IDLAT_TOOLS_VERIFY_HPP
#define IDLAT_TOOLS_VERIFY_HPP

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <idlat/idlat.hpp>

namespace idlat::tools {

/// Self-contained replay of the two worked smoothing examples and reduced
/// versions of the property suites. Deterministic (fixed seeds), no I/O
/// beyond the log stream.
class Verifier
{
public:
  explicit Verifier(std::ostream& log) : log_(log) {}

  bool run()
  {
    check("example n=3, phi = x^3-1", [] { return example_shift3(); });
    check("example n=4, phi = x^4-1", [] { return example_shift4(); });
    check("ideal-matrix identities (60 random pairs)", [this] { return ideal_matrix_identities(60); });
    check("circulant transpose and Gram spectrum (30 random)", [this] { return circulant_spectrum(30); });
    check("eigenvalue bound <= lambda_1 <= |B*| relations (60 random bases)", [this] { return lattice_bounds(60); });
    check("module lattices are cyclic (25 random)", [this] { return module_cyclic(25); });
    check("smoothing bound chain (12 random cyclic lattices)", [this] { return bound_chain(12); });
    check("smoothing monotonicity under kL (6 random)", [this] { return monotonicity(6); });
    check("folded Gaussian near uniform at eta(Z, 1/2)", [] { return folded_z(); });
    log_ << (failures_ == 0 ? "verify: all checks passed" : "verify: " + std::to_string(failures_) + " check(s) failed")
         << "\n";
    return failures_ == 0;
  }

private:
  using Clock = std::chrono::steady_clock;

  void check(const std::string& name, const std::function<bool()>& f)
  {
    auto t0 = Clock::now();
    bool ok = false;
    std::string err;
    try {
      ok = f();
    } catch (const std::exception& e) {
      err = e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (!ok)
      ++failures_;
    log_ << (ok ? "PASS  " : "FAIL  ") << name << "  (" << static_cast<long>(ms) << " ms)";
    if (!err.empty())
      log_ << "  error: " << err;
    log_ << "\n";
  }

  static bool near(double a, double b, double tol = 1e-9) { return std::fabs(a - b) <= tol; }

  static LatticeBasis upper_ones(std::size_t n)
  {
    QMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        b(i, j) = 1;
    return LatticeBasis(b);
  }

  static bool example_shift3()
  {
    auto ctx = cyclic_context(3);
    LatticeBasis L = upper_ones(3);
    RingElement g(ctx, QVector{0, 0, 1});
    auto cert = is_prime_spot(g);
    bool ok = cert.u == RingElement(ctx, Poly{0, 1}) && cert.tg == RingElement(ctx, Poly{0, 0, 1});
    for (double v : cert.tg_values)
      ok = ok && near(v, 1.0);
    ok = ok && near(gram_schmidt(dual_basis(L)).min_norm(), std::sqrt(3.0) / 3);
    double tg = bound_tg(L, g).value, gs = bound_gs(L);
    return ok && near(tg, std::sqrt(3.0)) && near(gs, 3.0) && tg <= gs && is_cyclic(L, ctx);
  }

  /// g = x - 2 modulo x^4 - 1. The inverse is the folded geometric series
  /// -(1/2) sum (x/2)^k = -(8 + 4x + 2x^2 + x^3)/15, and |T_g(theta)| is
  /// 1 / |g(theta^-1)|, i.e. {1, 1/sqrt5, 1/3, 1/sqrt5}.
  static bool example_shift4()
  {
    auto ctx = cyclic_context(4);
    LatticeBasis L = upper_ones(4);
    RingElement g(ctx, QVector{-2, 1, 0, 0});
    auto cert = is_prime_spot(g);
    QVector u{Rational(-8, 15), Rational(-4, 15), Rational(-2, 15), Rational(-1, 15)};
    QVector tg{Rational(-8, 15), Rational(-1, 15), Rational(-2, 15), Rational(-4, 15)};
    bool ok = cert.u.coeffs() == u && cert.tg.coeffs() == tg && ring_mul(g, cert.u) == RingElement::one(ctx);
    std::vector<double> expect{1.0, 1 / std::sqrt(5.0), 1.0 / 3, 1 / std::sqrt(5.0)};
    for (std::size_t i = 0; i < 4; ++i)
      ok = ok && near(cert.tg_values[i], expect[i]);
    ok = ok && near(gram_schmidt(dual_basis(L)).min_norm(), 0.5);
    return ok && near(bound_tg(L, g).value, 6.0) && near(bound_gs(L), 4.0);
  }

  Rational rand_q(int lo, int hi, int max_den = 4)
  {
    std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }

  RingElement rand_elem(const QuotientContext& ctx, bool integral = false)
  {
    QVector v(ctx.n());
    for (auto& q : v)
      q = integral ? rand_q(-3, 3, 1) : rand_q(-5, 5);
    return RingElement(ctx, v);
  }

  static QuotientContext trinomial(std::size_t n)
  {
    QVector c(n + 1);
    c[0] = -1;
    c[1] = -1;
    c[n] = 1;
    return QuotientContext(Poly(c));
  }

  bool ideal_matrix_identities(int count)
  {
    std::vector<QuotientContext> ctxs;
    for (std::size_t n : {2, 3, 4})
      ctxs.push_back(cyclic_context(n)), ctxs.push_back(trinomial(n));
    for (int t = 0; t < count; ++t) {
      const auto& ctx = ctxs[static_cast<std::size_t>(t) % ctxs.size()];
      RingElement f = rand_elem(ctx), g = rand_elem(ctx);
      auto Hf = ideal_matrix(f).entries(), Hg = ideal_matrix(g).entries();
      if (Hf != ideal_matrix_as_polynomial(f))
        return false;
      if (Hf * Hg != ideal_matrix(conv_product(f, g)).entries() || Hf * Hg != Hg * Hf)
        return false;
      if (conv_product(f, g) != ring_mul(f, g))
        return false;
      if (ideal_matrix(f + g).entries() != Hf + Hg)
        return false;
      auto det = ideal_det(f);
      if (std::fabs(det.exact.get_d() - det.spectral) > 1e-6 * std::max(1.0, std::fabs(det.exact.get_d())))
        return false;
    }
    return true;
  }

  bool circulant_spectrum(int count)
  {
    for (int t = 0; t < count; ++t) {
      auto ctx = cyclic_context(3 + static_cast<std::size_t>(t) % 4);
      RingElement g = rand_elem(ctx, true);
      if (g.is_zero())
        continue;
      auto H = ideal_matrix(g).entries();
      if (circulant_transpose(g).entries() != H.transpose())
        return false;
      auto ev = symmetric_eigenvalues(to_double(H.transpose() * H));
      std::vector<double> sq;
      for (auto v : ideal_spectrum(g))
        sq.push_back(std::norm(v));
      std::sort(sq.begin(), sq.end());
      for (std::size_t i = 0; i < ev.size(); ++i)
        if (std::fabs(ev[i] - sq[i]) > 1e-6 * std::max(1.0, sq[i]))
          return false;
    }
    return true;
  }

  std::optional<LatticeBasis> rand_basis(std::size_t n)
  {
    QMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        b(i, j) = rand_q(-5, 5, 3);
    if (determinant(b) == 0)
      return std::nullopt;
    return LatticeBasis(b);
  }

  bool lattice_bounds(int count)
  {
    for (int t = 0; t < count; ++t) {
      auto L = rand_basis(2 + static_cast<std::size_t>(t) % 3);
      if (!L)
        continue;
      auto sv = min_distance(*L);
      double lb = eigen_lower_bound(*L);
      if (lb > sv.length + 1e-9 || sv.sq_length < gram_schmidt(*L).min_sq_norm)
        return false;
      if (!(dual_basis(dual_basis(*L)) == *L))
        return false;
      if (L->det_gram() * dual_basis(*L).det_gram() != 1)
        return false;
    }
    return true;
  }

  bool module_cyclic(int count)
  {
    for (int t = 0; t < count; ++t) {
      auto ctx = cyclic_context(2 + static_cast<std::size_t>(t) % 3);
      std::vector<RingElement> gens{rand_elem(ctx, true), rand_elem(ctx, true)};
      if (gens[0].is_zero() && gens[1].is_zero())
        continue;
      auto cl = module_to_lattice(gens);
      if (!is_cyclic(cl.basis, ctx) || !cl.basis.is_integral())
        return false;
    }
    return true;
  }

  /// Random full-rank cyclic integer lattice with a prime spot inside it.
  std::optional<std::pair<LatticeBasis, RingElement>> rand_cyclic(std::size_t n)
  {
    auto ctx = cyclic_context(n);
    for (int attempt = 0; attempt < 50; ++attempt) {
      RingElement a = rand_elem(ctx, true);
      if (a.is_zero())
        continue;
      try {
        is_prime_spot(a);
      } catch (const NotPrimeSpot&) {
        continue;
      }
      auto cl = module_to_lattice({a, rand_elem(ctx, true)});
      return std::make_pair(cl.basis, a);
    }
    return std::nullopt;
  }

  bool bound_chain(int count)
  {
    for (int t = 0; t < count; ++t) {
      auto inst = rand_cyclic(2 + static_cast<std::size_t>(t) % 3);
      if (!inst)
        continue;
      auto r = smoothing_report(inst->first, inst->second);
      double slack = 1e-6;
      if (r.eta_numeric > r.bound_lambda + slack || r.eta_numeric > *r.bound_tg + slack ||
          r.eta_numeric > r.bound_gs + slack || r.bound_lambda > *r.bound_tg + slack)
        return false;
    }
    return true;
  }

  bool monotonicity(int count)
  {
    for (int t = 0; t < count; ++t) {
      auto L = rand_basis(1 + static_cast<std::size_t>(t) % 2);
      if (!L)
        continue;
      for (int k : {2, 3}) {
        LatticeBasis kL = L->scaled(k);
        for (double eps : {std::ldexp(1.0, -static_cast<int>(L->n())), 0.1})
          if (eta_numeric(*L, eps) > eta_numeric(kL, eps) + 1e-6)
            return false;
      }
    }
    return true;
  }

  static bool folded_z()
  {
    LatticeBasis Z = LatticeBasis::identity(1);
    double s = eta_numeric(Z, 0.5);
    auto sd = statistical_distance_check(Z, s, 10000, 1);
    return sd.pass && sd.delta_hat <= 0.25 + 1e-3;
  }

  std::ostream& log_;
  std::mt19937_64 rng_{20240611};
  int failures_ = 0;
};

} // namespace idlat::tools

#endif // IDLAT_TOOLS_VERIFY_HPP
