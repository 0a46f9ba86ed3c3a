#pragma once

#include "tridiag/int_poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tridiag {

/// Square matrix of exact integers, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t size() const noexcept { return n_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<BigInt> entries_;
};

/// A_n - t I: -t on the diagonal, 1 on the two off-diagonals.
inline IntMatrix build_An_minus_tI(std::size_t n, const BigInt& t) {
  if (n < 1) throw std::invalid_argument("build_An_minus_tI: n must be >= 1");
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = -t;
    if (i + 1 < n) {
      m(i, i + 1) = 1;
      m(i + 1, i) = 1;
    }
  }
  return m;
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Every division in the update is exact. A zero pivot is replaced by a
/// lower row (flipping the sign); a column with no nonzero pivot means the
/// determinant is zero.
inline BigInt bareiss_det(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

}  // namespace tridiag
