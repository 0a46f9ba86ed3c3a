#pragma once

#include "tridiag/errors.hpp"
#include "tridiag/horner.hpp"
#include "tridiag/int_poly.hpp"
#include "tridiag/mp_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tridiag {

inline constexpr mpfr_prec_t kDefaultPrecisionBits = 256;

struct RootFinderOptions {
  std::size_t max_iterations = 2000;
};

/// All complex roots of an integer polynomial at extended precision.
struct RootSet {
  std::size_t n = 0;
  mpfr_prec_t precision_bits = kDefaultPrecisionBits;
  /// Sorted by real part, then imaginary part.
  std::vector<MpComplex> roots;
  /// |p(root)|, aligned with roots.
  std::vector<MpReal> residuals;
  std::size_t iterations = 0;
};

/// Roots with |Im| below 2^(-bits/4) are classified real.
inline MpReal real_threshold(mpfr_prec_t bits) { return MpReal::pow2(-static_cast<long>(bits / 4), 64); }

inline bool is_real_root(const MpComplex& z, mpfr_prec_t bits) {
  return abs(z.im) < real_threshold(bits);
}

namespace detail {

/// Starting points on the circles given by the upper convex hull of
/// (k, log|c_k|) (Bini's Newton-polygon placement). c.front() and c.back()
/// must be nonzero.
inline std::vector<std::pair<double, double>> newton_polygon_starts(std::span<const BigInt> c) {
  const std::size_t deg = c.size() - 1;
  struct Pt {
    double k, logc;
  };
  std::vector<Pt> pts;
  for (std::size_t k = 0; k <= deg; ++k) {
    if (c[k] == 0) continue;
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, c[k].get_mpz_t());
    pts.push_back({static_cast<double>(k), std::log(std::abs(mant)) + exp * std::numbers::ln2});
  }
  // Upper hull, monotone chain.
  std::vector<Pt> hull;
  for (const Pt& p : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      const double cross = (b.k - a.k) * (p.logc - a.logc) - (b.logc - a.logc) * (p.k - a.k);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  constexpr double sigma = 0.7;
  std::vector<std::pair<double, double>> starts;
  starts.reserve(deg);
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const auto count = static_cast<std::size_t>(hull[h + 1].k - hull[h].k);
    const double radius = std::exp((hull[h].logc - hull[h + 1].logc) / static_cast<double>(count));
    for (std::size_t j = 0; j < count; ++j) {
      const double angle = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count) +
                           2 * std::numbers::pi * static_cast<double>(h) / static_cast<double>(deg) + sigma;
      starts.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
    }
  }
  return starts;
}

inline std::vector<MpReal> to_mp(std::span<const BigInt> c, mpfr_prec_t bits) {
  std::vector<MpReal> out;
  out.reserve(c.size());
  for (const auto& v : c) out.emplace_back(v, bits);
  return out;
}

}  // namespace detail

/// |p(z)| by compensated Horner at the precision of z.
inline MpReal residual_at(std::span<const MpReal> coeffs, const MpComplex& z) {
  MpReal re(z.precision()), im(z.precision());
  compensated_horner<MpReal>(coeffs, z.re, z.im, re, im);
  return sqrt(re * re + im * im);
}

/// Finds every complex root of p by Aberth-Ehrlich simultaneous iteration.
///
/// Exact zero roots are split off first. The rest start on Newton-polygon
/// circles; p is evaluated by compensated Horner at `precision_bits`. A root
/// is frozen when its correction is below 2^(-bits+8) relative to it, or when
/// |p| has reached the evaluation error floor. Throws NonConvergence after
/// `max_iterations` sweeps.
inline RootSet find_roots(const IntPoly& p, mpfr_prec_t precision_bits = kDefaultPrecisionBits,
                          RootFinderOptions options = {}) {
  if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be >= 1");
  if (precision_bits < 53) throw std::invalid_argument("find_roots: precision_bits must be >= 53");
  const mpfr_prec_t bits = precision_bits;
  const auto& all = p.coeffs();
  std::size_t zeros = 0;
  while (all[zeros] == 0) ++zeros;
  const std::span<const BigInt> q(all.data() + zeros, all.size() - zeros);
  const std::size_t m = q.size() - 1;

  RootSet out;
  out.n = static_cast<std::size_t>(p.degree());
  out.precision_bits = bits;

  std::vector<MpComplex> z;
  z.reserve(out.n);
  if (m >= 1) {
    const auto c = detail::to_mp(q, bits);
    std::vector<BigInt> dq_int(m);
    for (std::size_t k = 1; k <= m; ++k) dq_int[k - 1] = q[k] * static_cast<unsigned long>(k);
    const auto dc = detail::to_mp(dq_int, bits);
    std::vector<MpReal> abs_c;
    for (const auto& v : q) abs_c.emplace_back(BigInt(abs(v)), 64);

    for (const auto& [x, y] : detail::newton_polygon_starts(q)) {
      z.emplace_back(MpReal(x, bits), MpReal(y, bits));
    }

    const MpReal tol = MpReal::pow2(-(static_cast<long>(bits) - 8), 64);
    const MpReal tol2 = tol * tol;
    // Compensated Horner error floor, relative to sum |c_k| |z|^k.
    MpReal floor_scale = MpReal::pow2(-static_cast<long>(bits), 64) * static_cast<long>(8 * m);
    floor_scale = floor_scale * floor_scale * 2L;

    std::vector<bool> done(m, false);
    std::size_t remaining = m;
    MpReal pr(bits), pi(bits), dr(bits), di(bits);
    MpReal sr(bits), si(bits), xr(bits), xi(bits), nrm(bits), t(bits);
    std::size_t iter = 0;
    while (remaining > 0 && iter < options.max_iterations) {
      ++iter;
      for (std::size_t i = 0; i < m; ++i) {
        if (done[i]) continue;
        compensated_horner<MpReal>(c, z[i].re, z[i].im, pr, pi);
        if (pr.is_zero() && pi.is_zero()) {
          done[i] = true;
          --remaining;
          continue;
        }
        // Stop when |p(z)| is already at the evaluation noise floor.
        const MpReal pabs2(pr * pr + pi * pi);
        const MpReal modz = MpReal(z[i].abs().to_double(), 64);
        const MpReal bound = floor_scale * horner<MpReal>(abs_c, modz);
        if (MpReal(pabs2, 64) <= bound * bound) {
          done[i] = true;
          --remaining;
          continue;
        }
        horner<MpReal>(dc, z[i].re, z[i].im, dr, di);

        // S = sum_{j != i} 1 / (z_i - z_j)
        sr.assign(0.0);
        si.assign(0.0);
        for (std::size_t j = 0; j < m; ++j) {
          if (j == i) continue;
          sub_to(xr, z[i].re, z[j].re);
          sub_to(xi, z[i].im, z[j].im);
          mul_to(nrm, xr, xr);
          mul_to(t, xi, xi);
          add_to(nrm, nrm, t);
          if (nrm.is_zero()) continue;
          mpfr_div(t.raw(), xr.raw(), nrm.raw(), MPFR_RNDN);
          add_to(sr, sr, t);
          mpfr_div(t.raw(), xi.raw(), nrm.raw(), MPFR_RNDN);
          sub_to(si, si, t);
        }

        MpComplex w(bits);
        const MpComplex pv(pr, pi);
        const MpComplex dv(dr, di);
        if (dv.re.is_zero() && dv.im.is_zero()) {
          // Stationary point: nudge off it.
          w = MpComplex(MpReal::pow2(-10, bits) + z[i].re * MpReal::pow2(-10, bits), MpReal::pow2(-11, bits));
        } else {
          const MpComplex newton = pv / dv;
          const MpComplex one(MpReal(1L, bits), MpReal(bits));
          w = newton / (one - newton * MpComplex(sr, si));
        }
        z[i].re -= w.re;
        z[i].im -= w.im;
        if (w.norm() <= tol2 * MpReal(z[i].norm(), 64)) {
          done[i] = true;
          --remaining;
        }
      }
    }
    out.iterations = iter;
    if (remaining > 0) {
      std::vector<double> res;
      for (const auto& root : z) res.push_back(residual_at(c, root).to_double());
      throw NonConvergence(iter, std::move(res));
    }
  }
  for (std::size_t k = 0; k < zeros; ++k) z.emplace_back(bits);

  const auto full = detail::to_mp(all, bits);
  std::vector<std::size_t> order(z.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (z[a].re != z[b].re) return z[a].re < z[b].re;
    return z[a].im < z[b].im;
  });
  for (std::size_t idx : order) {
    out.residuals.push_back(residual_at(full, z[idx]));
    out.roots.push_back(z[idx]);
  }
  return out;
}

}  // namespace tridiag
