#pragma once

// Numerical exploration of the equation f_n(x) = F_{n+1}, where F is the
// Fibonacci sequence: exact checks at x = i, root sets, conic fits, and
// scans of the observed root structure.

#include "tridiag/aberth.hpp"
#include "tridiag/charpoly.hpp"
#include "tridiag/ellipse_fit.hpp"
#include "tridiag/horner.hpp"
#include "tridiag/int_poly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tridiag {

struct BigFib {
  std::uint64_t index;
  BigInt value;
};

inline BigFib fibonacci(std::uint64_t n) {
  BigInt a = 0, b = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return {n, a};
}

/// f_{4k}(i) == F_{4k+1}, evaluated exactly in Z[i].
inline bool gaussian_unit_check(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("gaussian_unit_check: k must be >= 1");
  const auto f = charpoly_closed_form(4 * k).poly;
  const GaussianInt v = poly_eval_gaussian(f, GaussianInt::i());
  return v.im == 0 && v.re == fibonacci(4 * k + 1).value;
}

/// f_n(x) - F_{n+1}
inline IntPoly fib_shift_poly(std::uint64_t n) {
  const auto f = charpoly_closed_form(n).poly;
  return f.with_coeff(0, f.coeff(0) - fibonacci(n + 1).value);
}

/// f_29 with the x^25 coefficient changed from -351 to -350, minus F_30.
inline IntPoly perturbed_f29() { return fib_shift_poly(29).with_coeff(25, BigInt(-350)); }

inline std::vector<Point2> to_points(const RootSet& roots) {
  std::vector<Point2> pts;
  pts.reserve(roots.roots.size());
  for (const auto& z : roots.roots) pts.push_back({z.re.to_double(), z.im.to_double()});
  return pts;
}

inline EllipseFit ellipse_fit(const RootSet& roots) {
  const auto pts = to_points(roots);
  return ellipse_fit(std::span<const Point2>(pts));
}

struct ScanRow {
  std::uint64_t n;
  std::size_t real_root_count;
  std::optional<MpReal> min_real_root;
  MpReal max_abs_imag;
  /// Names of the conjecture clauses this n violates (empty if none).
  std::vector<std::string> violations;
};

struct ScanReport {
  std::vector<ScanRow> rows;

  std::size_t violation_count() const {
    std::size_t c = 0;
    for (const auto& r : rows) c += r.violations.empty() ? 0 : 1;
    return c;
  }
};

inline ScanRow scan_one(std::uint64_t n, mpfr_prec_t bits, RootFinderOptions options = {}) {
  const RootSet rs = find_roots(fib_shift_poly(n), bits, options);
  ScanRow row{n, 0, std::nullopt, MpReal(bits), {}};
  for (const auto& z : rs.roots) {
    const MpReal im = abs(z.im);
    if (im > row.max_abs_imag) row.max_abs_imag = im;
    if (is_real_root(z, bits)) {
      ++row.real_root_count;
      if (!row.min_real_root || z.re < *row.min_real_root) row.min_real_root = z.re;
    }
  }
  if (n % 2 == 0) {
    if (row.real_root_count != 2) row.violations.emplace_back("real-count");
  } else {
    if (row.real_root_count != 1) row.violations.emplace_back("real-count");
    else if (row.min_real_root->sign() >= 0) row.violations.emplace_back("real-sign");
  }
  // |Im| <= 1; a root at Im = +-1 (x = +-i when 4 | n) is on the bound.
  if (row.max_abs_imag > MpReal(1L, bits) + real_threshold(bits)) {
    row.violations.emplace_back("imag-bound");
  }
  return row;
}

/// Appends a row, flagging "trend" if its smallest real root is larger than
/// the previous row's.
inline void append_scan_row(ScanReport& report, ScanRow row) {
  if (!report.rows.empty()) {
    const auto& prev = report.rows.back().min_real_root;
    if (prev && row.min_real_root && *row.min_real_root > *prev) row.violations.emplace_back("trend");
  }
  report.rows.push_back(std::move(row));
}

inline ScanReport conjecture_scan(std::uint64_t n_lo, std::uint64_t n_hi,
                                  mpfr_prec_t bits = kDefaultPrecisionBits,
                                  RootFinderOptions options = {}) {
  if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("conjecture_scan: need 1 <= n_lo <= n_hi");
  ScanReport report;
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) append_scan_row(report, scan_one(n, bits, options));
  return report;
}

struct CriticalPoint {
  MpReal lambda;
  MpReal value;
};

/// Real critical points of f_n with f_n evaluated there, ascending in lambda.
inline std::vector<CriticalPoint> local_extrema(std::uint64_t n, mpfr_prec_t bits = kDefaultPrecisionBits,
                                                RootFinderOptions options = {}) {
  if (n < 2) throw std::invalid_argument("local_extrema: n must be >= 2");
  const IntPoly f = charpoly_closed_form(n).poly;
  const RootSet rs = find_roots(poly_derivative(f), bits, options);
  const auto coeffs = detail::to_mp(f.span(), bits);
  std::vector<CriticalPoint> out;
  for (const auto& z : rs.roots) {
    if (!is_real_root(z, bits)) continue;
    out.push_back({z.re, compensated_horner<MpReal>(coeffs, z.re)});
  }
  return out;
}

}  // namespace tridiag
