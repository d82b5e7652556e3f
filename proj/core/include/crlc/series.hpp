#pragma once

#include <algorithm>

#include "crlc/poly.hpp"

namespace crlc {

/// Polynomial truncated at a weighted order: no stored term has weighted
/// degree >= order. Arithmetic truncates to the smaller operand order.
template <class K>
class SeriesT {
 public:
  SeriesT() = default;
  SeriesT(PolyT<K> body, int order)
      : body_(body.truncated(order)), order_(order) {
    if (order <= 0) throw std::invalid_argument("series order must be positive");
  }

  const PolyT<K>& body() const { return body_; }
  int order() const { return order_; }
  const AlphabetPtr& alphabet() const { return body_.alphabet(); }
  bool is_zero() const { return body_.is_zero(); }

  SeriesT truncated(int order) const { return SeriesT(body_, std::min(order, order_)); }

  friend SeriesT operator+(const SeriesT& a, const SeriesT& b) {
    int n = std::min(a.order_, b.order_);
    return SeriesT((a.body_ + b.body_).truncated(n), n);
  }
  friend SeriesT operator-(const SeriesT& a, const SeriesT& b) {
    int n = std::min(a.order_, b.order_);
    return SeriesT((a.body_ - b.body_).truncated(n), n);
  }
  friend SeriesT operator*(const SeriesT& a, const SeriesT& b) {
    int n = std::min(a.order_, b.order_);
    return SeriesT(a.body_.mul(b.body_, n), n);
  }
  SeriesT operator-() const { return SeriesT(-body_, order_); }

  SeriesT scaled(const K& c) const { return SeriesT(body_.scaled(c), order_); }
  SeriesT scaled_long(long n) const { return SeriesT(body_.scaled_long(n), order_); }

  SeriesT conj() const { return SeriesT(body_.conj(), order_); }

  SeriesT derivative(int var, int k = 1) const {
    int drop = k * body_.alphabet()->weight[var];
    if (order_ - drop <= 0)
      throw std::invalid_argument("series order exhausted by differentiation");
    return SeriesT(body_.derivative(var, k), order_ - drop);
  }

  friend bool operator==(const SeriesT& a, const SeriesT& b) {
    return a.order_ == b.order_ && a.body_ == b.body_;
  }

  std::string str() const {
    return body_.str() + " + O(" + std::to_string(order_) + ")";
  }

 private:
  PolyT<K> body_;
  int order_ = 0;
};

using Series = SeriesT<Scalar>;
using NumSeries = SeriesT<NumComplex>;

namespace detail {

template <class K>
K coeff_one(const PolyT<K>& sample) {
  if constexpr (std::is_same_v<K, Scalar>) {
    (void)sample;
    return Scalar(1);
  } else {
    mpfr_prec_t p = sample.terms().empty() ? 128 : sample.terms().begin()->second.prec();
    return K::from_long(1, p);
  }
}

}  // namespace detail

/// Inverse of the constant a + b*sqrt2 of a polynomial (degree-0 input).
template <class K>
PolyT<K> constant_inverse(const PolyT<K>& c) {
  if (!c.is_constant() || c.is_zero())
    throw std::domain_error("constant_inverse: zero or nonconstant input");
  K one = detail::coeff_one(c);
  if constexpr (std::is_same_v<K, Scalar>) {
    Scalar a = c.constant_term(Scalar(0));
    Scalar b = c.sqrt2_term(Scalar(0));
    Scalar den = a * a - Scalar(2) * b * b;
    if (den.is_zero()) throw std::domain_error("constant_inverse: zero norm");
    PolyT<K> out(c.alphabet(), a / den);
    out += PolyT<K>::sqrt2(c.alphabet(), one).scaled(-b / den);
    return out;
  } else {
    K a = c.constant_term(K::from_long(0, 128));
    K one_over = one / a;
    return PolyT<K>(c.alphabet(), one_over);
  }
}

/// Multiplicative inverse: requires a nonzero constant term. Newton
/// iteration x <- x(2 - s x), quadratically correct.
template <class K>
SeriesT<K> series_inverse(const SeriesT<K>& s) {
  PolyT<K> c0(s.alphabet());
  c0 += PolyT<K>(s.alphabet(), s.body().constant_term(K{}));
  {
    Mono m;
    m.r2 = 1;
    K r2c = s.body().coeff(m, K{});
    if (!CoeffOps<K>::is_zero(r2c)) {
      c0 += PolyT<K>::sqrt2(s.alphabet(), r2c);
    }
  }
  if (c0.is_zero()) throw std::domain_error("series_inverse: zero constant term");
  const int n = s.order();
  PolyT<K> x = constant_inverse(c0);
  PolyT<K> two(s.alphabet(), CoeffOps<K>::mul_long(detail::coeff_one(s.body()), 2));
  for (int correct = 1; correct < n; correct *= 2) {
    int target = std::min(2 * correct, n);
    x = x.mul(two - s.body().mul(x, target), target).truncated(target);
  }
  return SeriesT<K>(x, n);
}

/// Square root with constant term +1; requires the input constant term to
/// be exactly 1. Computes 1/sqrt(s) by Newton, then multiplies by s.
template <class K>
SeriesT<K> series_sqrt(const SeriesT<K>& s) {
  K one = detail::coeff_one(s.body());
  const K c0 = s.body().constant_term(K{});
  Mono r2m;
  r2m.r2 = 1;
  bool const_ok;
  if constexpr (std::is_same_v<K, Scalar>) {
    const_ok = c0 == Scalar(1) && CoeffOps<K>::is_zero(s.body().coeff(r2m, K{}));
  } else {
    const_ok = (c0 - one).below_pow10(20);
  }
  if (!const_ok) throw std::domain_error("series_sqrt: constant term must be 1");
  const int n = s.order();
  PolyT<K> y(s.alphabet(), one);
  PolyT<K> three(s.alphabet(), CoeffOps<K>::mul_long(one, 3));
  for (int correct = 1; correct < n; correct *= 2) {
    int target = std::min(2 * correct, n);
    PolyT<K> sy2 = s.body().mul(y.mul(y, target), target);
    PolyT<K> half_step = (three - sy2).mul(y, target);
    // divide by 2
    PolyT<K> next(s.alphabet());
    for (const auto& [m, c] : half_step.terms()) {
      if constexpr (std::is_same_v<K, Scalar>) {
        next.add_term(m, c * Scalar::ratio(1, 2));
      } else {
        next.add_term(m, c / K::from_long(2, c.prec()));
      }
    }
    y = next.truncated(target);
  }
  return SeriesT<K>(s.body().mul(y, n), n);
}

}  // namespace crlc
