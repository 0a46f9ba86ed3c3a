#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <string>
#include <utility>

namespace tridiag {

/// Owning MPFR floating value with a per-object mantissa width in bits.
///
/// Binary operators round to nearest at the wider of the two operand
/// precisions; compound assignment keeps the left operand's precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  MpReal(double x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  MpReal(long x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  MpReal(const mpz_class& x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  /// x rounded to `bits`.
  MpReal(const MpReal& x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set(v_, x.v_, MPFR_RNDN);
  }
  /// Parses a decimal string, e.g. "-2.20796".
  MpReal(const char* text, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_str(v_, text, 10, MPFR_RNDN);
  }

  MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpReal(MpReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  /// Assign a value, keeping this object's precision.
  MpReal& assign(const MpReal& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpReal& assign(double x) {
    mpfr_set_d(v_, x, MPFR_RNDN);
    return *this;
  }

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Decimal scientific notation with enough digits to round-trip at this
  /// precision ("0" for zero).
  std::string to_string(std::size_t digits = 0) const {
    if (mpfr_zero_p(v_)) return "0";
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    mpfr_exp_t exp = 0;
    char* s = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string out;
    std::size_t pos = 0;
    if (mant[0] == '-') {
      out += '-';
      pos = 1;
    }
    out += mant[pos];
    if (mant.size() > pos + 1) {
      out += '.';
      out.append(mant, pos + 1, std::string::npos);
    }
    out += 'e';
    out += std::to_string(static_cast<long>(exp) - 1);
    return out;
  }

  /// Fixed-point decimal with `decimals` digits after the point.
  std::string to_fixed(int decimals) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rf", decimals, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  MpReal operator-() const {
    MpReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  MpReal& operator+=(const MpReal& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpReal& operator-=(const MpReal& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpReal& operator*=(const MpReal& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpReal& operator/=(const MpReal& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpReal& operator*=(long k) {
    mpfr_mul_si(v_, v_, k, MPFR_RNDN);
    return *this;
  }

#define TRIDIAG_MP_BINOP(op, fn)                                                \
  friend MpReal operator op(const MpReal& a, const MpReal& b) {                 \
    MpReal r(std::max(a.precision(), b.precision()));                           \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                            \
    return r;                                                                   \
  }
  TRIDIAG_MP_BINOP(+, mpfr_add)
  TRIDIAG_MP_BINOP(-, mpfr_sub)
  TRIDIAG_MP_BINOP(*, mpfr_mul)
  TRIDIAG_MP_BINOP(/, mpfr_div)
#undef TRIDIAG_MP_BINOP

  friend MpReal operator*(const MpReal& a, long k) {
    MpReal r(a.precision());
    mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const MpReal& a, const MpReal& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend std::partial_ordering operator<=>(const MpReal& a, const MpReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const MpReal& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const MpReal& a, double b) {
    int c = mpfr_cmp_d(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  static MpReal pi(mpfr_prec_t bits) {
    MpReal r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  /// 2^e at the given precision.
  static MpReal pow2(long e, mpfr_prec_t bits) {
    MpReal r(1L, bits);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

inline MpReal abs(const MpReal& a) {
  MpReal r(a.precision());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

inline MpReal sqrt(const MpReal& a) {
  MpReal r(a.precision());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

inline MpReal cos(const MpReal& a) {
  MpReal r(a.precision());
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

/// a*b + c with a single rounding.
inline MpReal fma(const MpReal& a, const MpReal& b, const MpReal& c) {
  MpReal r(a.precision());
  mpfr_fma(r.raw(), a.raw(), b.raw(), c.raw(), MPFR_RNDN);
  return r;
}

/// Complex number over MpReal; both parts share one precision.
struct MpComplex {
  MpReal re;
  MpReal im;

  explicit MpComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
  MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const noexcept { return re.precision(); }

  /// |z|^2
  MpReal norm() const { return re * re + im * im; }
  MpReal abs() const { return sqrt(norm()); }
  MpComplex conj() const { return {re, -im}; }

  friend MpComplex operator+(const MpComplex& a, const MpComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend MpComplex operator-(const MpComplex& a, const MpComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
    MpReal d = b.norm();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const MpComplex& a, const MpComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace tridiag
