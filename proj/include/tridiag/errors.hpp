#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tridiag {

/// Base for every domain error raised by the library. Precondition
/// violations on plain arguments use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact computation produced a value that cannot occur if the
/// arithmetic is correct (e.g. a non-integral interpolated coefficient).
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// halve_variable() met a coefficient c_k with c_k / 2^k not an integer.
class IntegralityViolation : public Error {
 public:
  IntegralityViolation(std::size_t index, const std::string& coefficient)
      : Error("coefficient " + coefficient + " of x^" + std::to_string(index) +
              " is not divisible by 2^" + std::to_string(index)),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// containment_certificate() was asked for a pair outside n = m (mod m+1), m < n.
class NotSufficient : public Error {
 public:
  NotSufficient(std::uint64_t m, std::uint64_t n, std::uint64_t remainder)
      : Error("condition not met: (n-m) mod (m+1) = " + std::to_string(remainder) +
              " for m=" + std::to_string(m) + ", n=" + std::to_string(n)),
        m_(m), n_(n), remainder_(remainder) {}

  std::uint64_t m() const noexcept { return m_; }
  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t remainder() const noexcept { return remainder_; }

 private:
  std::uint64_t m_;
  std::uint64_t n_;
  std::uint64_t remainder_;
};

/// The simultaneous root iteration hit its sweep cap.
class NonConvergence : public Error {
 public:
  NonConvergence(std::size_t iterations, std::vector<double> residuals)
      : Error("root iteration did not converge after " + std::to_string(iterations) +
              " sweeps"),
        iterations_(iterations), residuals_(std::move(residuals)) {}

  std::size_t iterations() const noexcept { return iterations_; }
  /// |p(z)| at each current estimate, in the solver's root order.
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::size_t iterations_;
  std::vector<double> residuals_;
};

/// The conic least-squares system is rank deficient (e.g. collinear points).
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

}  // namespace tridiag
