#include "golden_tables.hpp"
#include "tridiag/charpoly.hpp"
#include "tridiag/chebyshev.hpp"
#include "tridiag/errors.hpp"

#include <gtest/gtest.h>

using namespace tridiag;

TEST(ChebyshevU, TableTwo) {
  for (std::uint64_t n = 0; n <= 6; ++n) EXPECT_EQ(chebyshev_U(n), golden::chebyshev_U_table()[n]) << n;
}

TEST(ChebyshevS, TableTwo) {
  for (std::uint64_t n = 0; n <= 6; ++n) EXPECT_EQ(chebyshev_S(n), golden::chebyshev_S_table()[n]) << n;
}

TEST(ChebyshevPair, Leading) {
  for (std::uint64_t n = 0; n <= 40; ++n) {
    const auto pr = chebyshev_pair(n);
    EXPECT_EQ(pr.U.degree(), static_cast<std::ptrdiff_t>(n));
    EXPECT_EQ(pr.S.degree(), static_cast<std::ptrdiff_t>(n));
    EXPECT_EQ(pr.U.leading(), BigInt(1) << static_cast<mp_bitcnt_t>(n));
    EXPECT_EQ(pr.S.leading(), 1);
  }
}

TEST(Reflect, Examples) {
  EXPECT_EQ(reflect(IntPoly{0, 1}), (IntPoly{0, -1}));
  EXPECT_EQ(reflect(IntPoly{-1, 0, 1}), (IntPoly{-1, 0, 1}));
  EXPECT_EQ(reflect(IntPoly{0, -2, 0, 1}), (IntPoly{0, 2, 0, -1}));
}

TEST(HalveVariable, Examples) {
  EXPECT_EQ(halve_variable(IntPoly{0, 2}), (IntPoly{0, 1}));
  EXPECT_EQ(halve_variable(golden::chebyshev_U_table()[4]), golden::chebyshev_S_table()[4]);
  EXPECT_EQ(halve_variable(golden::chebyshev_U_table()[6]), golden::chebyshev_S_table()[6]);
}

TEST(HalveVariable, RejectsNonIntegral) {
  try {
    halve_variable(IntPoly{1, 0, 2});
    FAIL() << "expected IntegralityViolation";
  } catch (const IntegralityViolation& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(ChebyshevIdentity, ChainHoldsExactly) {
  const auto us = chebyshev_U_sequence(200);
  const auto ss = chebyshev_S_sequence(200);
  const auto fs = charpoly_recurrence_sequence(200);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    ASSERT_EQ(reflect(ss[n]), charpoly_closed_form(n).poly) << n;
    ASSERT_EQ(halve_variable(us[n]), ss[n]) << n;
    ASSERT_EQ(reflect(halve_variable(us[n])), fs[n - 1]) << n;
  }
}

TEST(ChebyshevIdentity, UAtOne) {
  const auto us = chebyshev_U_sequence(200);
  for (std::uint64_t n = 0; n <= 200; ++n) ASSERT_EQ(poly_eval_int(us[n], 1), n + 1);
}

TEST(ChebyshevIdentity, Parity) {
  const auto us = chebyshev_U_sequence(60);
  const auto ss = chebyshev_S_sequence(60);
  for (std::uint64_t n = 0; n <= 60; ++n) {
    EXPECT_TRUE(has_parity(us[n], n));
    EXPECT_TRUE(has_parity(ss[n], n));
  }
}
