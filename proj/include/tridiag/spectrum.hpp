#pragma once

#include "tridiag/errors.hpp"
#include "tridiag/mp_real.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tridiag {

/// Exact eigenvalue angle s/(n+1): the eigenvalue is 2 cos(pi * s / (n+1)).
struct EigenAngle {
  std::uint64_t num;
  std::uint64_t den;

  EigenAngle reduced() const {
    const std::uint64_t g = std::gcd(num, den);
    return {num / g, den / g};
  }

  /// Equality of rationals by cross multiplication.
  friend bool operator==(const EigenAngle& a, const EigenAngle& b) {
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

/// Spectrum of A_n: angles s/(n+1) and values 2cos(pi s/(n+1)) for s = 1..n,
/// in descending order of value.
struct EigenvalueSet {
  std::uint64_t n;
  std::vector<EigenAngle> angles;
  std::vector<double> values;
};

/// Round-to-nearest double of 2 cos(pi * a), computed from the reduced
/// fraction so that equal angles always give bit-identical values.
inline double eigenvalue_of(EigenAngle a) {
  a = a.reduced();
  // cos(pi - t) = -cos(t): fold to [0, 1/2].
  bool negate = false;
  if (2 * a.num > a.den) {
    a.num = a.den - a.num;
    negate = true;
  }
  if (2 * a.num == a.den) return 0.0;
  constexpr mpfr_prec_t bits = 128;
  MpReal t = MpReal::pi(bits);
  mpfr_mul_ui(t.raw(), t.raw(), a.num, MPFR_RNDN);
  mpfr_div_ui(t.raw(), t.raw(), a.den, MPFR_RNDN);
  MpReal v = cos(t) * 2L;
  const double d = v.to_double();
  return negate ? -d : d;
}

inline EigenvalueSet eigenvalues_closed_form(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("eigenvalues_closed_form: n must be >= 1");
  EigenvalueSet set{n, {}, {}};
  set.angles.reserve(n);
  set.values.reserve(n);
  for (std::uint64_t s = 1; s <= n; ++s) {
    set.angles.push_back({s, n + 1});
    set.values.push_back(s <= (n + 1) / 2 ? eigenvalue_of({s, n + 1}) : -set.values[n - s]);
  }
  for (std::size_t j = 1; j < set.values.size(); ++j) {
    if (!(set.values[j] < set.values[j - 1])) {
      throw InternalConsistencyError("eigenvalues_closed_form: values not strictly decreasing");
    }
  }
  return set;
}

/// rho(A_n) = 2 cos(pi/(n+1)).
inline double spectral_radius(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("spectral_radius: n must be >= 1");
  return eigenvalue_of({1, n + 1});
}

struct Interval {
  double lo;
  double hi;

  bool contains(double x) const { return lo <= x && x <= hi; }
};

/// Golub's inclusion interval [a_k - sigma_k, a_k + sigma_k] for row k of A_n
/// (a_k = 0). sigma_k is 1 for the first and last rows and sqrt(2) otherwise.
inline Interval golub_interval(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k < 1 || k > n) throw std::out_of_range("golub_interval: need 1 <= k <= n");
  const double sigma = (k == 1 || k == n) ? 1.0 : std::sqrt(2.0);
  return {-sigma, sigma};
}

inline bool containment_sufficient(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("containment_sufficient: m, n must be >= 1");
  return m < n && (n - m) % (m + 1) == 0;
}

/// Witness for the spectrum of A_m lying inside that of A_n when n = m + (m+1)k:
/// eigenvalue r of A_m equals eigenvalue r(k+1) of A_n.
struct ContainmentCertificate {
  std::uint64_t m;
  std::uint64_t n;
  std::uint64_t k;
  /// index_map[r-1] = s for r = 1..m.
  std::vector<std::uint64_t> index_map;
};

inline ContainmentCertificate containment_certificate(std::uint64_t m, std::uint64_t n) {
  if (!containment_sufficient(m, n)) {
    const auto diff = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(m);
    const auto mod = static_cast<std::int64_t>(m + 1);
    throw NotSufficient(m, n, static_cast<std::uint64_t>(((diff % mod) + mod) % mod));
  }
  ContainmentCertificate cert{m, n, (n - m) / (m + 1), {}};
  cert.index_map.reserve(m);
  std::vector<bool> used(n + 1, false);
  for (std::uint64_t r = 1; r <= m; ++r) {
    const std::uint64_t s = r * (cert.k + 1);
    if (s < 1 || s > n || used[s] || !(EigenAngle{r, m + 1} == EigenAngle{s, n + 1})) {
      throw InternalConsistencyError("containment_certificate: angle check failed");
    }
    used[s] = true;
    cert.index_map.push_back(s);
  }
  return cert;
}

/// Numerical probe: every n in (m, n_max] such that each eigenvalue of A_m is
/// within tol of some eigenvalue of A_n.
inline std::vector<std::uint64_t> containment_search(std::uint64_t m, std::uint64_t n_max,
                                                     double tol = 1e-12) {
  if (!(tol > 0)) throw std::invalid_argument("containment_search: tol must be > 0");
  const auto small = eigenvalues_closed_form(m);
  std::vector<std::uint64_t> hits;
  for (std::uint64_t n = m + 1; n <= n_max; ++n) {
    const auto big = eigenvalues_closed_form(n);
    bool all = true;
    for (double v : small.values) {
      bool found = false;
      for (double w : big.values) {
        if (std::abs(v - w) <= tol) {
          found = true;
          break;
        }
      }
      if (!found) {
        all = false;
        break;
      }
    }
    if (all) hits.push_back(n);
  }
  return hits;
}

}  // namespace tridiag
