#pragma once

// Golden tables for regression checks, plus high-precision
// root values computed independently (mpmath polyroots, 256-bit, 800 extra
// bits) and frozen here. Coefficient lists are low-to-high.

#include "tridiag/int_poly.hpp"

#include <vector>

namespace golden {

/// f_1..f_12; element n-1 is f_n.
inline const std::vector<tridiag::IntPoly>& charpoly_table() {
  static const std::vector<tridiag::IntPoly> rows = {
      {0, -1},
      {-1, 0, 1},
      {0, 2, 0, -1},
      {1, 0, -3, 0, 1},
      {0, -3, 0, 4, 0, -1},
      {-1, 0, 6, 0, -5, 0, 1},
      {0, 4, 0, -10, 0, 6, 0, -1},
      {1, 0, -10, 0, 15, 0, -7, 0, 1},
      {0, -5, 0, 20, 0, -21, 0, 8, 0, -1},
      {-1, 0, 15, 0, -35, 0, 28, 0, -9, 0, 1},
      {0, 6, 0, -35, 0, 56, 0, -36, 0, 10, 0, -1},
      {1, 0, -21, 0, 70, 0, -84, 0, 45, 0, -11, 0, 1},
  };
  return rows;
}

/// The same rows as printed, highest power first, with x for lambda.
inline const std::vector<const char*>& charpoly_table_text() {
  static const std::vector<const char*> rows = {
      "-x",
      "x^2 - 1",
      "-x^3 + 2x",
      "x^4 - 3x^2 + 1",
      "-x^5 + 4x^3 - 3x",
      "x^6 - 5x^4 + 6x^2 - 1",
      "-x^7 + 6x^5 - 10x^3 + 4x",
      "x^8 - 7x^6 + 15x^4 - 10x^2 + 1",
      "-x^9 + 8x^7 - 21x^5 + 20x^3 - 5x",
      "x^10 - 9x^8 + 28x^6 - 35x^4 + 15x^2 - 1",
      "-x^11 + 10x^9 - 36x^7 + 56x^5 - 35x^3 + 6x",
      "x^12 - 11x^10 + 45x^8 - 84x^6 + 70x^4 - 21x^2 + 1",
  };
  return rows;
}

/// U_0..U_6
inline const std::vector<tridiag::IntPoly>& chebyshev_U_table() {
  static const std::vector<tridiag::IntPoly> rows = {
      {1},
      {0, 2},
      {-1, 0, 4},
      {0, -4, 0, 8},
      {1, 0, -12, 0, 16},
      {0, 6, 0, -32, 0, 32},
      {-1, 0, 24, 0, -80, 0, 64},
  };
  return rows;
}

/// S_0..S_6
inline const std::vector<tridiag::IntPoly>& chebyshev_S_table() {
  static const std::vector<tridiag::IntPoly> rows = {
      {1},
      {0, 1},
      {-1, 0, 1},
      {0, -2, 0, 1},
      {1, 0, -3, 0, 1},
      {0, 3, 0, -4, 0, 1},
      {-1, 0, 6, 0, -5, 0, 1},
  };
  return rows;
}

inline const tridiag::IntPoly& f15() {
  static const tridiag::IntPoly p{0, 8, 0, -84, 0, 252, 0, -330, 0, 220, 0, -78, 0, 14, 0, -1};
  return p;
}

inline const tridiag::IntPoly& f29() {
  static const tridiag::IntPoly p{0,       -15, 0,      560,    0,     -6188, 0,      31824, 0,   -92378,
                                  0,       167960, 0,   -203490, 0,    170544, 0,     -100947, 0, 42504,
                                  0,       -12650, 0,   2600,   0,     -351,  0,      28,    0,   -1};
  return p;
}

/// Eigenvalues of A_1..A_5 to five decimals, increasing.
inline const std::vector<std::vector<double>>& decimal_roots_table() {
  static const std::vector<std::vector<double>> rows = {
      {0.0},
      {-1.0, 1.0},
      {-1.41421, 0.0, 1.41421},
      {-1.61803, -0.618034, 0.618034, 1.61803},
      {-1.73205, -1.0, 0.0, 1.0, 1.73205},
  };
  return rows;
}

// Independently computed roots of f_n(x) - F_{n+1}.
inline constexpr const char* kRealRoot12 =
    "2.166482176867673313533663110417351872374022721588460404640008685834714233040622";
inline constexpr const char* kRealRoot29 =
    "-2.207959462274855531817551798941638834703090398314365234931825314521270024217841";
inline constexpr const char* kRealRoot201 =
    "-2.232057598043597383899831218150006405343346295845253658580177308670114807761414";
inline constexpr const char* kTopRoot201Re =
    "-0.01742656009502256162684016548511053336250688373426516344382302326990559706885";
inline constexpr const char* kTopRoot201Im =
    "0.9999693615060062669101892284708750557709269710782024178140551487504729719296";

}  // namespace golden
