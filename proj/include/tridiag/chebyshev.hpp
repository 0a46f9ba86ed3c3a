#pragma once

#include "tridiag/errors.hpp"
#include "tridiag/int_poly.hpp"

#include <cstdint>
#include <vector>

namespace tridiag {

/// U_n and its monic normalisation S_n(x) = U_n(x/2).
struct ChebyshevPair {
  std::uint64_t n;
  IntPoly U;
  IntPoly S;
};

namespace detail {
// p_0 = 1, p_1 = a x, p_k = a x p_{k-1} - p_{k-2}; a = 2 gives U, a = 1 gives S.
inline std::vector<IntPoly> chebyshev_like_sequence(std::uint64_t n, long a) {
  std::vector<IntPoly> seq;
  seq.reserve(n + 1);
  seq.push_back(IntPoly{1});
  if (n >= 1) seq.push_back(IntPoly{0, a});
  for (std::uint64_t k = 2; k <= n; ++k) {
    IntPoly scaled = poly_shift_mul(seq[k - 1]);
    if (a != 1) {
      std::vector<BigInt> c = scaled.coeffs();
      for (auto& v : c) v *= a;
      scaled = IntPoly(std::move(c));
    }
    seq.push_back(scaled - seq[k - 2]);
  }
  return seq;
}
}  // namespace detail

/// U_0..U_n (Chebyshev polynomials of the second kind).
inline std::vector<IntPoly> chebyshev_U_sequence(std::uint64_t n) {
  return detail::chebyshev_like_sequence(n, 2);
}

/// S_0..S_n.
inline std::vector<IntPoly> chebyshev_S_sequence(std::uint64_t n) {
  return detail::chebyshev_like_sequence(n, 1);
}

inline IntPoly chebyshev_U(std::uint64_t n) { return std::move(chebyshev_U_sequence(n).back()); }
inline IntPoly chebyshev_S(std::uint64_t n) { return std::move(chebyshev_S_sequence(n).back()); }

inline ChebyshevPair chebyshev_pair(std::uint64_t n) { return {n, chebyshev_U(n), chebyshev_S(n)}; }

/// p(-x)
inline IntPoly reflect(const IntPoly& p) {
  std::vector<BigInt> c = p.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return IntPoly(std::move(c));
}

/// p(x/2), which must again have integer coefficients.
inline IntPoly halve_variable(const IntPoly& p) {
  std::vector<BigInt> c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k == 0 || c[k] == 0) continue;
    if (!mpz_divisible_2exp_p(c[k].get_mpz_t(), k)) throw IntegralityViolation(k, c[k].get_str());
    mpz_fdiv_q_2exp(c[k].get_mpz_t(), c[k].get_mpz_t(), k);
  }
  return IntPoly(std::move(c));
}

}  // namespace tridiag
