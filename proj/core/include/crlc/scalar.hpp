#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace crlc {

/// Exact Gaussian rational a + b*i with gcd-reduced parts and positive
/// denominators. Equality is representation equality.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}
  Scalar(const mpq_class& re) : re_(re), im_(0) { canon(); }
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) { canon(); }

  static Scalar ratio(long p, long q);
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar imag_ratio(long p, long q);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// re^2 + im^2, a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(long k) const;

  /// Canonical form: "p/q", "r/s*i", "p/q+r/s*i", "p/q-r/s*i", "0".
  std::string str() const;
  /// Parses the canonical form produced by str(); also accepts "i", "-i",
  /// "3i" style shorthands used in CLI parameter lists.
  static std::optional<Scalar> parse(std::string_view text);

  double to_double_re() const { return re_.get_d(); }
  double to_double_im() const { return im_.get_d(); }

 private:
  void canon() { re_.canonicalize(); im_.canonicalize(); }
  mpq_class re_, im_;
};

/// Exact square root of a nonnegative rational, when it is a perfect square.
std::optional<mpq_class> sqrt_exact(const mpq_class& q);

/// |s| for a Gaussian rational, when the norm is a perfect rational square.
std::optional<mpq_class> abs_exact(const Scalar& s);

std::string rat_str(const mpq_class& q);

}  // namespace crlc
