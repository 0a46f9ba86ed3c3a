#pragma once

// Horner and compensated Horner evaluation of real-coefficient polynomials
// at real or complex points. Coefficients are low-to-high.
//
// The compensated variants carry the exact rounding error of every product
// and sum (error-free transformations) and fold it back at the end, so the
// result is as accurate as if computed in twice the working precision.

#include "tridiag/mp_real.hpp"

#include <cmath>
#include <cstddef>
#include <span>

#ifdef __FAST_MATH__
#error compensated evaluation requires IEEE semantics; do not build with -ffast-math
#endif

namespace tridiag {

// In-place arithmetic primitives, overloaded for double and MpReal.
inline double make_like(double) { return 0.0; }
inline MpReal make_like(const MpReal& proto) { return MpReal(proto.precision()); }

inline void add_to(double& r, double a, double b) { r = a + b; }
inline void sub_to(double& r, double a, double b) { r = a - b; }
inline void mul_to(double& r, double a, double b) { r = a * b; }
/// r = a*b - c, one rounding
inline void fms_to(double& r, double a, double b, double c) { r = std::fma(a, b, -c); }
inline void copy_to(double& r, double a) { r = a; }
inline void neg_to(double& r, double a) { r = -a; }

inline void add_to(MpReal& r, const MpReal& a, const MpReal& b) {
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
}
inline void sub_to(MpReal& r, const MpReal& a, const MpReal& b) {
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
}
inline void mul_to(MpReal& r, const MpReal& a, const MpReal& b) {
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
}
inline void fms_to(MpReal& r, const MpReal& a, const MpReal& b, const MpReal& c) {
  mpfr_fms(r.raw(), a.raw(), b.raw(), c.raw(), MPFR_RNDN);
}
inline void copy_to(MpReal& r, const MpReal& a) { mpfr_set(r.raw(), a.raw(), MPFR_RNDN); }
inline void neg_to(MpReal& r, const MpReal& a) { mpfr_neg(r.raw(), a.raw(), MPFR_RNDN); }

/// Scratch registers for the error-free transformations.
template <class T>
struct EftScratch {
  T z, t, u;
  explicit EftScratch(const T& proto) : z(make_like(proto)), t(make_like(proto)), u(make_like(proto)) {}
};

/// s + e = a + b exactly (Knuth's TwoSum).
template <class T>
void two_sum(const T& a, const T& b, T& s, T& e, EftScratch<T>& w) {
  add_to(s, a, b);
  sub_to(w.z, s, a);
  sub_to(w.t, s, w.z);
  sub_to(w.t, a, w.t);
  sub_to(w.u, b, w.z);
  add_to(e, w.t, w.u);
}

/// p + e = a * b exactly (fused multiply-subtract).
template <class T>
void two_prod(const T& a, const T& b, T& p, T& e) {
  mul_to(p, a, b);
  fms_to(e, a, b, p);
}

template <class T>
T horner(std::span<const T> c, const T& x) {
  if (c.empty()) return make_like(x);
  T r = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    mul_to(r, r, x);
    add_to(r, r, c[k]);
  }
  return r;
}

template <class T>
T compensated_horner(std::span<const T> c, const T& x) {
  if (c.empty()) return make_like(x);
  T r = c.back();
  T corr = make_like(x);
  T p = make_like(x), pe = make_like(x), se = make_like(x), err = make_like(x);
  EftScratch<T> w(x);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    two_prod(r, x, p, pe);
    two_sum(p, c[k], r, se, w);
    add_to(err, pe, se);
    mul_to(corr, corr, x);
    add_to(corr, corr, err);
  }
  add_to(r, r, corr);
  return r;
}

/// Plain complex Horner: (re, im) = p(zr + i zi).
template <class T>
void horner(std::span<const T> c, const T& zr, const T& zi, T& re, T& im) {
  if (c.empty()) {
    copy_to(re, make_like(zr));
    copy_to(im, make_like(zr));
    return;
  }
  copy_to(re, c.back());
  copy_to(im, make_like(zr));
  T a = make_like(zr), b = make_like(zr);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    // (re + i im)(zr + i zi) + c_k
    mul_to(a, re, zr);
    mul_to(b, im, zi);
    sub_to(a, a, b);
    mul_to(b, re, zi);
    mul_to(im, im, zr);
    add_to(im, im, b);
    add_to(re, a, c[k]);
  }
}

/// Compensated complex Horner: (re, im) = p(zr + i zi) to roughly twice the
/// working precision.
template <class T>
void compensated_horner(std::span<const T> c, const T& zr, const T& zi, T& re, T& im) {
  if (c.empty()) {
    copy_to(re, make_like(zr));
    copy_to(im, make_like(zr));
    return;
  }
  copy_to(re, c.back());
  copy_to(im, make_like(zr));
  T cr = make_like(zr), ci = make_like(zr);
  T p1 = make_like(zr), p2 = make_like(zr), p3 = make_like(zr), p4 = make_like(zr);
  T e1 = make_like(zr), e2 = make_like(zr), e3 = make_like(zr), e4 = make_like(zr);
  T s1 = make_like(zr), e5 = make_like(zr), e6 = make_like(zr), e7 = make_like(zr);
  T er = make_like(zr), ei = make_like(zr), a = make_like(zr), b = make_like(zr);
  EftScratch<T> w(zr);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    two_prod(re, zr, p1, e1);
    two_prod(im, zi, p2, e2);
    two_prod(re, zi, p3, e3);
    two_prod(im, zr, p4, e4);
    neg_to(p2, p2);
    two_sum(p1, p2, s1, e5, w);
    two_sum(s1, c[k], re, e6, w);
    two_sum(p3, p4, im, e7, w);
    // er = e1 - e2 + e5 + e6, ei = e3 + e4 + e7
    sub_to(er, e1, e2);
    add_to(er, er, e5);
    add_to(er, er, e6);
    add_to(ei, e3, e4);
    add_to(ei, ei, e7);
    // (cr + i ci) <- (cr + i ci)(zr + i zi) + (er + i ei)
    mul_to(a, cr, zr);
    mul_to(b, ci, zi);
    sub_to(a, a, b);
    add_to(a, a, er);
    mul_to(b, cr, zi);
    mul_to(ci, ci, zr);
    add_to(ci, ci, b);
    add_to(ci, ci, ei);
    copy_to(cr, a);
  }
  add_to(re, re, cr);
  add_to(im, im, ci);
}

}  // namespace tridiag
