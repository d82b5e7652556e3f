#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crlc/alphabet.hpp"
#include "crlc/bigfloat.hpp"
#include "crlc/scalar.hpp"

namespace crlc {

inline constexpr int kMaxVars = 6;

/// Monomial: exponent vector plus an adjoined sqrt(2) of exponent 0 or 1.
/// sqrt2^2 is folded into the coefficient, so arithmetic stays in the ring
/// Q(i)[sqrt2] without ever touching the Scalar type.
struct Mono {
  std::array<uint16_t, kMaxVars> e{};
  uint8_t r2 = 0;
  uint32_t wdeg = 0;

  friend bool operator==(const Mono& a, const Mono& b) {
    return a.e == b.e && a.r2 == b.r2;
  }
};

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.wdeg != b.wdeg) return a.wdeg < b.wdeg;
    if (a.e != b.e) return a.e < b.e;
    return a.r2 < b.r2;
  }
};

template <class K>
struct CoeffOps;

template <>
struct CoeffOps<Scalar> {
  static constexpr bool fold_sqrt2 = false;
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
  static Scalar conj(const Scalar& s) { return s.conj(); }
  static Scalar mul_long(const Scalar& s, long n) { return s * Scalar(n); }
  static Scalar mul_sqrt2(const Scalar&) {
    throw std::logic_error("exact backend keeps sqrt2 formal");
  }
  static Scalar one(const Scalar&) { return Scalar(1); }
  static Scalar imag_unit(const Scalar&) { return Scalar::i(); }
};

template <>
struct CoeffOps<NumComplex> {
  static constexpr bool fold_sqrt2 = true;
  // Numeric zero pruning is threshold-free; classification thresholds are
  // applied by the callers that inspect coefficients.
  static bool is_zero(const NumComplex& s) {
    return s.re().is_zero() && s.im().is_zero();
  }
  static NumComplex conj(const NumComplex& s) { return s.conj(); }
  static NumComplex mul_long(const NumComplex& s, long n) {
    return s * NumComplex::from_long(n, s.prec());
  }
  static NumComplex mul_sqrt2(const NumComplex& s) {
    BigFloat two = BigFloat::from_long(2, s.prec());
    BigFloat r = two.sqrt();
    return NumComplex(s.re() * r, s.im() * r);
  }
  static NumComplex one(const NumComplex& like) { return NumComplex::from_long(1, like.prec()); }
  static NumComplex imag_unit(const NumComplex& like) {
    return NumComplex(BigFloat::from_long(0, like.prec()), BigFloat::from_long(1, like.prec()));
  }
};

/// Multivariate polynomial over K in a fixed alphabet, dense exponent map in
/// graded-lex canonical order (weighted degree, then exponent lex).
template <class K>
class PolyT {
 public:
  using Ops = CoeffOps<K>;
  using TermMap = std::map<Mono, K, MonoLess>;

  PolyT() = default;
  explicit PolyT(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
  PolyT(AlphabetPtr alpha, const K& c) : alpha_(std::move(alpha)) {
    if (!Ops::is_zero(c)) terms_.emplace(Mono{}, c);
  }

  static PolyT var(const AlphabetPtr& alpha, const std::string& name, const K& one) {
    PolyT p(alpha);
    int idx = alpha->index_of(name);
    Mono m;
    m.e[idx] = 1;
    m.wdeg = static_cast<uint32_t>(alpha->weight[idx]);
    p.terms_.emplace(m, one);
    return p;
  }

  static PolyT sqrt2(const AlphabetPtr& alpha, const K& one) {
    PolyT p(alpha);
    if constexpr (Ops::fold_sqrt2) {
      p.add_term(Mono{}, Ops::mul_sqrt2(one));
    } else {
      Mono m;
      m.r2 = 1;
      p.terms_.emplace(m, one);
    }
    return p;
  }

  const AlphabetPtr& alphabet() const { return alpha_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() <= 2 && terms_.rbegin()->first.wdeg == 0);
  }
  /// Coefficient of the monomial 1 (the sqrt2-free constant part).
  K constant_term(const K& zero) const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? zero : it->second;
  }
  /// Coefficient of the monomial sqrt2.
  K sqrt2_term(const K& zero) const {
    Mono m;
    m.r2 = 1;
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
  }
  K coeff(const Mono& m, const K& zero) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
  }

  uint32_t weighted_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.wdeg;
  }
  uint32_t low_weight() const {
    return terms_.empty() ? 0 : terms_.begin()->first.wdeg;
  }
  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m.e[var]);
    return d;
  }

  void add_term(const Mono& m, const K& c) {
    if (Ops::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (Ops::is_zero(it->second)) terms_.erase(it);
    }
  }

  PolyT& operator+=(const PolyT& o) {
    check_alpha(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  PolyT& operator-=(const PolyT& o) {
    check_alpha(o);
    for (const auto& [m, c] : o.terms_) add_term(m, Ops::mul_long(c, -1));
    return *this;
  }
  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  PolyT operator-() const {
    PolyT r(alpha_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, Ops::mul_long(c, -1));
    return r;
  }

  /// Product, dropping every term of weighted degree >= cutoff when cutoff
  /// is nonnegative.
  PolyT mul(const PolyT& o, int64_t cutoff = -1) const {
    check_alpha(o);
    PolyT r(alpha_);
    const uint64_t olow = o.low_weight();
    for (const auto& [ma, ca] : terms_) {
      // terms are sorted by weight, so once even the lightest partner
      // overshoots the cutoff the remaining rows do too
      if (cutoff >= 0 && ma.wdeg + olow >= static_cast<uint64_t>(cutoff)) break;
      for (const auto& [mb, cb] : o.terms_) {
        uint64_t w = static_cast<uint64_t>(ma.wdeg) + mb.wdeg;
        if (cutoff >= 0 && w >= static_cast<uint64_t>(cutoff)) break;
        Mono m;
        m.wdeg = static_cast<uint32_t>(w);
        for (int k = 0; k < kMaxVars; ++k) m.e[k] = ma.e[k] + mb.e[k];
        K c = ca * cb;
        int r2sum = ma.r2 + mb.r2;
        if (r2sum == 2) {
          c = Ops::mul_long(c, 2);
        } else {
          m.r2 = static_cast<uint8_t>(r2sum);
        }
        r.add_term(m, c);
      }
    }
    return r;
  }
  friend PolyT operator*(const PolyT& a, const PolyT& b) { return a.mul(b); }

  PolyT scaled(const K& c) const {
    PolyT r(alpha_);
    if (Ops::is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
  }
  PolyT scaled_long(long n) const {
    PolyT r(alpha_);
    if (n == 0) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, Ops::mul_long(v, n));
    return r;
  }

  PolyT pow(int k, int64_t cutoff = -1) const {
    if (k < 0) throw std::invalid_argument("PolyT::pow: negative exponent");
    PolyT acc(alpha_);
    acc.add_term(Mono{}, one_like());
    PolyT base = *this;
    while (k > 0) {
      if (k & 1) acc = acc.mul(base, cutoff);
      base = k > 1 ? base.mul(base, cutoff) : base;
      k >>= 1;
    }
    return acc;
  }

  /// k-th partial derivative in the named variable.
  PolyT derivative(int var, int order = 1) const {
    PolyT r = *this;
    for (int step = 0; step < order; ++step) {
      PolyT next(alpha_);
      for (const auto& [m, c] : r.terms_) {
        if (m.e[var] == 0) continue;
        Mono d = m;
        d.e[var] -= 1;
        d.wdeg -= static_cast<uint32_t>(alpha_->weight[var]);
        next.add_term(d, Ops::mul_long(c, m.e[var]));
      }
      r = std::move(next);
    }
    return r;
  }

  /// Formal conjugation: coefficients conjugated, variables swapped with
  /// their conj partner, sqrt2 fixed.
  PolyT conj() const {
    PolyT r(alpha_);
    for (const auto& [m, c] : terms_) {
      Mono cm;
      cm.r2 = m.r2;
      cm.wdeg = m.wdeg;
      for (int k = 0; k < alpha_->size(); ++k) cm.e[alpha_->conj[k]] = m.e[k];
      r.terms_.emplace(cm, Ops::conj(c));
    }
    return r;
  }

  /// Drops every term of weighted degree >= order.
  PolyT truncated(int64_t order) const {
    PolyT r(alpha_);
    for (const auto& [m, c] : terms_) {
      if (m.wdeg >= static_cast<uint64_t>(order)) break;
      r.terms_.emplace(m, c);
    }
    return r;
  }

  /// Coefficients of var^0, var^1, ..., as polynomials free of var.
  std::vector<PolyT> collect(int var) const {
    std::vector<PolyT> out(static_cast<size_t>(degree_in(var)) + 1, PolyT(alpha_));
    for (const auto& [m, c] : terms_) {
      Mono q = m;
      int k = q.e[var];
      q.e[var] = 0;
      q.wdeg -= static_cast<uint32_t>(k * alpha_->weight[var]);
      out[k].add_term(q, c);
    }
    return out;
  }

  friend bool operator==(const PolyT& a, const PolyT& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (!(ia->first == ib->first)) return false;
      if constexpr (std::is_same_v<K, Scalar>) {
        if (!(ia->second == ib->second)) return false;
      } else {
        if (!Ops::is_zero(ia->second - ib->second)) return false;
      }
    }
    return true;
  }
  friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

  std::string str() const;

 private:
  K one_like() const {
    if constexpr (std::is_same_v<K, Scalar>) {
      return Scalar(1);
    } else {
      mpfr_prec_t p = terms_.empty() ? 128 : terms_.begin()->second.prec();
      return K::from_long(1, p);
    }
  }
  void check_alpha(const PolyT& o) const {
    if (alpha_ != o.alpha_)
      throw std::invalid_argument("polynomial alphabets differ: " +
                                  (alpha_ ? alpha_->name : std::string("null")) + " vs " +
                                  (o.alpha_ ? o.alpha_->name : std::string("null")));
  }

  AlphabetPtr alpha_;
  TermMap terms_;
};

using Poly = PolyT<Scalar>;
using NumPoly = PolyT<NumComplex>;

template <class K>
std::string PolyT<K>::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs;
    if constexpr (std::is_same_v<K, Scalar>) {
      cs = c.str();
    } else {
      cs = c.str();
    }
    std::string mono;
    if (m.r2) mono += "sqrt2";
    for (int k = 0; k < alpha_->size(); ++k) {
      if (m.e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += alpha_->vars[k];
      if (m.e[k] > 1) mono += "^" + std::to_string(m.e[k]);
    }
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = mono;
    } else if (cs == "-1") {
      term = "-" + mono;
    } else {
      bool wrap = cs.find('+') != std::string::npos ||
                  cs.find('-', 1) != std::string::npos;
      term = (wrap ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (!first && term[0] != '-') out += "+";
    out += term;
    first = false;
  }
  return out;
}

/// Exact polynomial quotient p / d, or nullopt when d does not divide p.
/// The divisor must be sqrt2-free; the dividend may carry sqrt2.
template <class K>
std::optional<PolyT<K>> exact_divide(const PolyT<K>& p, const PolyT<K>& d);

/// Synthetic division of p by (var - r): returns {quotient, remainder} with
/// remainder free of var, p == q*(var - r) + rem. r must be free of var.
template <class K>
std::pair<PolyT<K>, PolyT<K>> divide_linear(const PolyT<K>& p, int var, const PolyT<K>& r);

/// Pseudo-remainder of p by d with respect to var: lc(d)^k * p = q*d + rem,
/// deg_var(rem) < deg_var(d). Returns rem.
Poly pseudo_remainder(const Poly& p, const Poly& d, int var);

/// Numeric image of an exact polynomial (sqrt2 folded in).
NumPoly to_numeric(const Poly& p, mpfr_prec_t prec);

extern template class PolyT<Scalar>;
extern template class PolyT<NumComplex>;

}  // namespace crlc
