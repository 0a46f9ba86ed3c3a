#include "golden_tables.hpp"
#include "tridiag/errors.hpp"
#include "tridiag/spectrum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace tridiag;

namespace {

// Three-term evaluation of f_n at x in double; stable on [-2, 2].
double eval_fn_double(std::uint64_t n, double x) {
  double prev = 1.0, cur = -x;
  for (std::uint64_t k = 2; k <= n; ++k) {
    const double next = -x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST(Eigenvalues, DecimalTable) {
  for (std::uint64_t n = 1; n <= 5; ++n) {
    const auto set = eigenvalues_closed_form(n);
    const auto& want = golden::decimal_roots_table()[n - 1];
    ASSERT_EQ(set.values.size(), want.size());
    for (std::size_t j = 0; j < want.size(); ++j) {
      // values are descending, the table ascending
      EXPECT_NEAR(set.values[n - 1 - j], want[j], 5e-6) << "n=" << n;
    }
  }
}

TEST(Eigenvalues, GoldenRatio) {
  const double phi = std::numbers::phi;
  const auto set = eigenvalues_closed_form(4);
  EXPECT_NEAR(set.values[0], phi, 1e-12);
  EXPECT_NEAR(set.values[1], 1 / phi, 1e-12);
  EXPECT_NEAR(set.values[2], -1 / phi, 1e-12);
  EXPECT_NEAR(set.values[3], -phi, 1e-12);
  EXPECT_NEAR(spectral_radius(4), phi, 1e-12);
}

TEST(Eigenvalues, ExactZerosAndSymmetry) {
  EXPECT_EQ(eigenvalues_closed_form(1).values[0], 0.0);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const auto set = eigenvalues_closed_form(n);
    for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(set.values[j], -set.values[n - 1 - j]) << n;
    if (n % 2) ASSERT_EQ(set.values[n / 2], 0.0);
    for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(set.angles[j], (EigenAngle{j + 1, n + 1}));
  }
}

TEST(Eigenvalues, MatchStdCos) {
  for (std::uint64_t n = 1; n <= 100; ++n) {
    const auto set = eigenvalues_closed_form(n);
    for (std::uint64_t s = 1; s <= n; ++s) {
      const double ref = 2 * std::cos(std::numbers::pi * static_cast<double>(s) / static_cast<double>(n + 1));
      ASSERT_NEAR(set.values[s - 1], ref, 1e-14);
    }
  }
}

TEST(Eigenvalues, AreRootsOfCharpoly) {
  for (std::uint64_t n = 1; n <= 64; ++n) {
    for (double v : eigenvalues_closed_form(n).values) ASSERT_LT(std::abs(eval_fn_double(n, v)), 1e-9) << n;
  }
}

TEST(Eigenvalues, RejectsZero) {
  EXPECT_THROW(eigenvalues_closed_form(0), std::invalid_argument);
  EXPECT_THROW(spectral_radius(0), std::invalid_argument);
}

TEST(SpectralRadius, BelowTwoAndIncreasing) {
  double prev = spectral_radius(1);
  EXPECT_EQ(prev, 0.0);
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    const double r = spectral_radius(n);
    ASSERT_LT(r, 2.0);
    ASSERT_GE(r, prev) << n;
    prev = r;
  }
  for (std::uint64_t n : {100000ULL, 500000ULL, 999999ULL, 1000000ULL}) EXPECT_LT(spectral_radius(n), 2.0);
}

TEST(Golub, Intervals) {
  const auto end = golub_interval(5, 1);
  EXPECT_EQ(end.lo, -1.0);
  EXPECT_EQ(end.hi, 1.0);
  const auto mid = golub_interval(5, 3);
  EXPECT_DOUBLE_EQ(mid.hi, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(mid.lo, -std::sqrt(2.0));
  EXPECT_THROW(golub_interval(5, 0), std::out_of_range);
  EXPECT_THROW(golub_interval(5, 6), std::out_of_range);
}

TEST(Golub, SomeEigenvalueInUnitInterval) {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    const auto set = eigenvalues_closed_form(n);
    const auto iv = golub_interval(n, 1);
    bool hit = false;
    for (double v : set.values) hit = hit || iv.contains(v);
    ASSERT_TRUE(hit) << n;
  }
}

TEST(Containment, SufficientCondition) {
  EXPECT_TRUE(containment_sufficient(4, 9));
  EXPECT_TRUE(containment_sufficient(7, 15));
  EXPECT_FALSE(containment_sufficient(4, 10));
  EXPECT_FALSE(containment_sufficient(4, 4));
  EXPECT_THROW(containment_sufficient(0, 3), std::invalid_argument);
}

TEST(Containment, CertificateExamples) {
  const auto c = containment_certificate(4, 9);
  EXPECT_EQ(c.k, 1u);
  EXPECT_EQ(c.index_map, (std::vector<std::uint64_t>{2, 4, 6, 8}));

  const auto c2 = containment_certificate(7, 15);
  EXPECT_EQ(c2.k, 1u);
  for (std::uint64_t r = 1; r <= 7; ++r) EXPECT_EQ(c2.index_map[r - 1], 2 * r);

  EXPECT_EQ(containment_certificate(4, 44).k, 8u);
}

TEST(Containment, NotSufficientCarriesRemainder) {
  try {
    containment_certificate(4, 10);
    FAIL() << "expected NotSufficient";
  } catch (const NotSufficient& e) {
    EXPECT_EQ(e.m(), 4u);
    EXPECT_EQ(e.n(), 10u);
    EXPECT_EQ(e.remainder(), 1u);
  }
}

TEST(Containment, CertificatesForAllPairs) {
  for (std::uint64_t m = 1; m <= 20; ++m) {
    const auto small = eigenvalues_closed_form(m);
    for (std::uint64_t k = 0; k <= 10; ++k) {
      const std::uint64_t n = m + (m + 1) * k;
      if (n == m) continue;
      const auto cert = containment_certificate(m, n);
      const auto big = eigenvalues_closed_form(n);
      for (std::uint64_t r = 1; r <= m; ++r) {
        const auto s = cert.index_map[r - 1];
        // r/(m+1) == s/(n+1) exactly, by integer cross multiplication
        ASSERT_EQ(r * (n + 1), s * (m + 1));
        ASSERT_EQ(small.values[r - 1], big.values[s - 1]);
      }
    }
  }
}

TEST(Containment, SearchExamples) {
  EXPECT_EQ(containment_search(4, 44), (std::vector<std::uint64_t>{9, 14, 19, 24, 29, 34, 39, 44}));
  EXPECT_EQ(containment_search(1, 6), (std::vector<std::uint64_t>{3, 5}));
}

TEST(Containment, SearchMatchesBruteForceCos) {
  // Oracle: plain std::cos, tolerance loose enough for libm, tight enough to
  // separate distinct cosines at this size.
  for (std::uint64_t m = 1; m <= 6; ++m) {
    std::vector<std::uint64_t> want;
    for (std::uint64_t n = m + 1; n <= 40; ++n) {
      bool all = true;
      for (std::uint64_t r = 1; r <= m && all; ++r) {
        const double v = 2 * std::cos(std::numbers::pi * r / static_cast<double>(m + 1));
        bool found = false;
        for (std::uint64_t s = 1; s <= n; ++s) {
          const double w = 2 * std::cos(std::numbers::pi * s / static_cast<double>(n + 1));
          found = found || std::abs(v - w) < 1e-9;
        }
        all = found;
      }
      if (all) want.push_back(n);
    }
    EXPECT_EQ(containment_search(m, 40), want) << "m=" << m;
    if (m == 2) EXPECT_EQ(containment_search(2, 12), (std::vector<std::uint64_t>{5, 8, 11}));
  }
}
