#pragma once

#include "tridiag/errors.hpp"
#include "tridiag/int_matrix.hpp"
#include "tridiag/int_poly.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tridiag {

enum class CharPolyMethod { Recurrence, ClosedForm, DetOracle };

inline const char* to_string(CharPolyMethod m) {
  switch (m) {
    case CharPolyMethod::Recurrence: return "recurrence";
    case CharPolyMethod::ClosedForm: return "closed";
    case CharPolyMethod::DetOracle: return "oracle";
  }
  return "?";
}

/// f_n(x) = det(A_n - x I) together with how it was obtained.
struct CharPolyRecord {
  std::uint64_t n;
  IntPoly poly;
  CharPolyMethod method;
};

namespace detail {
inline void require_positive(std::uint64_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}
}  // namespace detail

/// f_1, ..., f_n from f_k = -x f_{k-1} - f_{k-2}, with f_1 = -x and f_2 = x^2 - 1.
/// Element k-1 of the result is f_k.
inline std::vector<IntPoly> charpoly_recurrence_sequence(std::uint64_t n) {
  detail::require_positive(n, "charpoly_recurrence");
  std::vector<IntPoly> seq;
  seq.reserve(n);
  seq.push_back(IntPoly{0, -1});
  if (n >= 2) seq.push_back(IntPoly{-1, 0, 1});
  for (std::uint64_t k = 3; k <= n; ++k) {
    const IntPoly& f1 = seq[k - 2];
    const IntPoly& f2 = seq[k - 3];
    seq.push_back(poly_neg(poly_add(poly_shift_mul(f1), f2)));
  }
  return seq;
}

inline CharPolyRecord charpoly_recurrence(std::uint64_t n) {
  auto seq = charpoly_recurrence_sequence(n);
  return {n, std::move(seq.back()), CharPolyMethod::Recurrence};
}

/// Coefficient of x^{m-2i} in f_m: (-1)^{m+i} C(m-i, i).
inline BigInt closed_form_coefficient(std::uint64_t m, std::uint64_t i) {
  detail::require_positive(m, "closed_form_coefficient");
  if (i > m / 2) {
    throw std::invalid_argument("closed_form_coefficient: i must be <= floor(m/2)");
  }
  BigInt c = binomial(m - i, static_cast<std::int64_t>(i));
  if ((m + i) % 2 == 1) c = -c;
  return c;
}

inline CharPolyRecord charpoly_closed_form(std::uint64_t n) {
  detail::require_positive(n, "charpoly_closed_form");
  std::vector<BigInt> c(n + 1);
  for (std::uint64_t i = 0; i <= n / 2; ++i) c[n - 2 * i] = closed_form_coefficient(n, i);
  return {n, IntPoly(std::move(c)), CharPolyMethod::ClosedForm};
}

/// Integer interpolation nodes nearest zero: 0, 1, -1, 2, -2, ...
inline std::vector<BigInt> interpolation_nodes(std::size_t count) {
  std::vector<BigInt> nodes;
  nodes.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    long mag = static_cast<long>((j + 1) / 2);
    nodes.emplace_back(j % 2 == 1 ? mag : -mag);
  }
  return nodes;
}

/// Rebuilds f_n from exact determinants det(A_n - t I) at `sample_count`
/// integer nodes, by Newton interpolation over the rationals.
///
/// Throws InternalConsistencyError if any interpolated coefficient is not an
/// integer, which can only happen if the determinant values are wrong.
inline CharPolyRecord charpoly_det_oracle(std::uint64_t n, std::uint64_t sample_count) {
  detail::require_positive(n, "charpoly_det_oracle");
  if (sample_count < n + 1) {
    throw std::invalid_argument("charpoly_det_oracle: sample_count must be >= n+1");
  }
  const auto nodes = interpolation_nodes(sample_count);
  std::vector<mpq_class> dd(sample_count);
  for (std::size_t j = 0; j < sample_count; ++j) {
    dd[j] = mpq_class(bareiss_det(build_An_minus_tI(n, nodes[j])));
  }
  // Divided differences in place: dd[j] becomes f[x_0..x_j].
  for (std::size_t level = 1; level < sample_count; ++level) {
    for (std::size_t j = sample_count - 1; j >= level; --j) {
      dd[j] = (dd[j] - dd[j - 1]) / mpq_class(nodes[j] - nodes[j - level]);
      dd[j].canonicalize();
    }
  }
  // Expand the Newton form from the innermost factor outwards.
  std::vector<mpq_class> poly{dd[sample_count - 1]};
  for (std::size_t j = sample_count - 1; j-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * nodes[j];
    }
    next[0] += dd[j];
    poly = std::move(next);
  }
  std::vector<BigInt> coeffs(poly.size());
  for (std::size_t k = 0; k < poly.size(); ++k) {
    poly[k].canonicalize();
    if (poly[k].get_den() != 1) {
      throw InternalConsistencyError("charpoly_det_oracle: coefficient of x^" + std::to_string(k) +
                                     " is not an integer: " + poly[k].get_str());
    }
    coeffs[k] = poly[k].get_num();
  }
  return {n, IntPoly(std::move(coeffs)), CharPolyMethod::DetOracle};
}

inline CharPolyRecord charpoly_det_oracle(std::uint64_t n) { return charpoly_det_oracle(n, n + 1); }

/// First `count` entries of the d-th diagonal of Pascal's triangle:
/// entry j is C(d-1+j, d-1).
inline std::vector<BigInt> pascal_diagonal(std::uint64_t d, std::uint64_t count) {
  if (d < 1 || count < 1) throw std::invalid_argument("pascal_diagonal: d and count must be >= 1");
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::uint64_t j = 0; j < count; ++j) {
    out.push_back(binomial(d - 1 + j, static_cast<std::int64_t>(d - 1)));
  }
  return out;
}

inline CharPolyRecord charpoly(std::uint64_t n, CharPolyMethod method) {
  switch (method) {
    case CharPolyMethod::Recurrence: return charpoly_recurrence(n);
    case CharPolyMethod::ClosedForm: return charpoly_closed_form(n);
    case CharPolyMethod::DetOracle: return charpoly_det_oracle(n);
  }
  throw std::invalid_argument("charpoly: unknown method");
}

/// True when only coefficients of index parity n mod 2 are nonzero,
/// i.e. f(-x) = (-1)^n f(x) coefficientwise.
inline bool has_parity(const IntPoly& p, std::uint64_t n) {
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if ((k % 2) != (n % 2) && c[k] != 0) return false;
  }
  return true;
}

}  // namespace tridiag
