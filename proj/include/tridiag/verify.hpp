#pragma once

#include "tridiag/charpoly.hpp"
#include "tridiag/chebyshev.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace tridiag {

struct VerifyOptions {
  std::uint64_t max_n = 200;
  std::uint64_t oracle_max = 12;
};

/// First disagreement found by run_verification.
struct Mismatch {
  std::string check;
  std::uint64_t n;
  std::size_t index;  ///< coefficient index (power of x)
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::uint64_t recurrence_checked = 0;
  std::uint64_t oracle_checked = 0;
  std::uint64_t parity_checked = 0;
  std::uint64_t chebyshev_checked = 0;
  std::optional<Mismatch> failure;

  bool ok() const { return !failure.has_value(); }
};

/// Produces f_n by the closed form. Swappable so that the runner itself can be
/// tested against a deliberately wrong implementation.
using ClosedFormBuilder = std::function<IntPoly(std::uint64_t)>;

inline IntPoly default_closed_form(std::uint64_t n) { return charpoly_closed_form(n).poly; }

namespace detail {
inline std::optional<Mismatch> compare(const std::string& check, std::uint64_t n, const IntPoly& expected,
                                       const IntPoly& actual) {
  if (expected == actual) return std::nullopt;
  const std::size_t len = std::max(expected.coeffs().size(), actual.coeffs().size());
  for (std::size_t k = 0; k < len; ++k) {
    if (expected.coeff(k) != actual.coeff(k)) {
      return Mismatch{check, n, k, expected.coeff(k).get_str(), actual.coeff(k).get_str()};
    }
  }
  return Mismatch{check, n, 0, "?", "?"};
}
}  // namespace detail

/// Cross-checks, stopping at the first failure:
///   recurrence == closed form, n <= max_n;
///   parity of the closed form, n <= max_n;
///   reflect(S_n) == f_n and halve_variable(U_n) == S_n, n <= max_n;
///   determinant oracle == closed form, n <= oracle_max.
inline VerifyReport run_verification(const VerifyOptions& opt,
                                     const ClosedFormBuilder& closed = default_closed_form) {
  VerifyReport rep;
  if (opt.max_n == 0) return rep;
  const auto rec = charpoly_recurrence_sequence(opt.max_n);
  const auto us = chebyshev_U_sequence(opt.max_n);
  const auto ss = chebyshev_S_sequence(opt.max_n);
  for (std::uint64_t n = 1; n <= opt.max_n; ++n) {
    const IntPoly f = closed(n);
    if ((rep.failure = detail::compare("recurrence-vs-closed", n, rec[n - 1], f))) return rep;
    ++rep.recurrence_checked;

    if (!has_parity(f, n)) {
      for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        if (k % 2 != n % 2 && f.coeffs()[k] != 0) {
          rep.failure = Mismatch{"parity", n, k, "0", f.coeffs()[k].get_str()};
          return rep;
        }
      }
    }
    ++rep.parity_checked;

    if ((rep.failure = detail::compare("chebyshev-S-reflect", n, f, reflect(ss[n])))) return rep;
    IntPoly halved;
    try {
      halved = halve_variable(us[n]);
    } catch (const IntegralityViolation& e) {
      rep.failure = Mismatch{"chebyshev-U-halve", n, e.index(), "integral", "non-integral"};
      return rep;
    }
    if ((rep.failure = detail::compare("chebyshev-U-halve", n, ss[n], halved))) return rep;
    ++rep.chebyshev_checked;
  }
  for (std::uint64_t n = 1; n <= opt.oracle_max; ++n) {
    if ((rep.failure = detail::compare("oracle-vs-closed", n, charpoly_det_oracle(n).poly, closed(n)))) {
      return rep;
    }
    ++rep.oracle_checked;
  }
  return rep;
}

}  // namespace tridiag
