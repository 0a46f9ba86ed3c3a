#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace tridiag {

using BigInt = mpz_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored low-to-high: coeffs()[k] multiplies x^k. The
/// stored sequence never ends in a zero; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  /// c * x^k
  static IntPoly monomial(const BigInt& c, std::size_t k) {
    std::vector<BigInt> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
  }

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  std::span<const BigInt> span() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree of a nonzero polynomial; -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }

  /// Coefficient of x^k, zero past the degree.
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  const BigInt& leading() const { return coeffs_.back(); }

  /// Returns a copy with the coefficient of x^k replaced.
  IntPoly with_coeff(std::size_t k, const BigInt& c) const {
    std::vector<BigInt> v = coeffs_;
    if (v.size() <= k) v.resize(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// Exact a + bi over the integers.
struct GaussianInt {
  BigInt re;
  BigInt im;

  static GaussianInt i() { return {BigInt(0), BigInt(1)}; }

  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {BigInt(a.re + b.re), BigInt(a.im + b.im)};
  }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {BigInt(a.re * b.re - a.im * b.im), BigInt(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline IntPoly poly_add(const IntPoly& p, const IntPoly& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < a.size()) out[k] += a[k];
    if (k < b.size()) out[k] += b[k];
  }
  return IntPoly(std::move(out));
}

inline IntPoly poly_neg(const IntPoly& p) {
  std::vector<BigInt> out = p.coeffs();
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

/// x * p
inline IntPoly poly_shift_mul(const IntPoly& p) {
  if (p.is_zero()) return {};
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size() + 1);
  out.emplace_back(0);
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return IntPoly(std::move(out));
}

inline IntPoly poly_derivative(const IntPoly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<BigInt> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(out));
}

inline IntPoly operator+(const IntPoly& p, const IntPoly& q) { return poly_add(p, q); }
inline IntPoly operator-(const IntPoly& p) { return poly_neg(p); }
inline IntPoly operator-(const IntPoly& p, const IntPoly& q) { return poly_add(p, poly_neg(q)); }

/// Exact Horner evaluation at an integer.
inline BigInt poly_eval_int(const IntPoly& p, const BigInt& t) {
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

/// Exact Horner evaluation in Z[i].
inline GaussianInt poly_eval_gaussian(const IntPoly& p, const GaussianInt& z) {
  GaussianInt acc{BigInt(0), BigInt(0)};
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

/// C(n, r), zero when r < 0 or r > n.
inline BigInt binomial(std::uint64_t n, std::int64_t r) {
  if (r < 0 || static_cast<std::uint64_t>(r) > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(r));
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  os << '[';
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k) os << ", ";
    os << p.coeffs()[k];
  }
  return os << ']';
}

}  // namespace tridiag
