#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "crlc/scalar.hpp"

namespace crlc {

/// Arbitrary-precision real float (MPFR, round to nearest).
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const mpq_class& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  static BigFloat from_long(long n, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
  }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  BigFloat operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  BigFloat sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// true iff |x| < 10^-digits
  bool below_pow10(long digits) const {
    if (is_zero()) return true;
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_set_si(t, 10, MPFR_RNDN);
    mpfr_pow_si(t, t, -digits, MPFR_RNDN);
    mpfr_t a;
    mpfr_init2(a, prec());
    mpfr_abs(a, v_, MPFR_RNDN);
    bool r = mpfr_less_p(a, t);
    mpfr_clear(a);
    mpfr_clear(t);
    return r;
  }
  std::string str(int digits = 20) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  mpfr_t v_;
};

/// Complex number over BigFloat. The zero threshold used in classification
/// decisions is applied by callers, not here.
class NumComplex {
 public:
  explicit NumComplex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
  NumComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  NumComplex(const Scalar& s, mpfr_prec_t prec) : re_(s.re(), prec), im_(s.im(), prec) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  mpfr_prec_t prec() const { return re_.prec(); }

  static NumComplex from_long(long n, mpfr_prec_t prec) {
    return NumComplex(BigFloat::from_long(n, prec), BigFloat::from_long(0, prec));
  }

  NumComplex conj() const { return NumComplex(re_, -im_); }
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat abs() const { return norm().sqrt(); }

  friend NumComplex operator+(const NumComplex& a, const NumComplex& b) {
    return NumComplex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend NumComplex operator-(const NumComplex& a, const NumComplex& b) {
    return NumComplex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend NumComplex operator*(const NumComplex& a, const NumComplex& b) {
    return NumComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend NumComplex operator/(const NumComplex& a, const NumComplex& b) {
    BigFloat n = b.norm();
    return NumComplex((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
  }
  NumComplex operator-() const { return NumComplex(-re_, -im_); }

  bool below_pow10(long digits) const {
    return re_.below_pow10(digits) && im_.below_pow10(digits);
  }
  std::string str() const { return re_.str() + (im_.sign() < 0 ? "" : "+") + im_.str() + "*i"; }

 private:
  BigFloat re_, im_;
};

}  // namespace crlc
