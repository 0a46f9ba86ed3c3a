#pragma once

#include "tridiag/aberth.hpp"
#include "tridiag/charpoly.hpp"
#include "tridiag/chebyshev.hpp"
#include "tridiag/ellipse_fit.hpp"
#include "tridiag/errors.hpp"
#include "tridiag/fibexplore.hpp"
#include "tridiag/format.hpp"
#include "tridiag/horner.hpp"
#include "tridiag/int_matrix.hpp"
#include "tridiag/int_poly.hpp"
#include "tridiag/mp_real.hpp"
#include "tridiag/spectrum.hpp"
#include "tridiag/verify.hpp"
