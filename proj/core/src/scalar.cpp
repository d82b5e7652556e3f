#include "crlc/scalar.hpp"

#include <stdexcept>

namespace crlc {

Scalar Scalar::ratio(long p, long q) {
  if (q == 0) throw std::invalid_argument("Scalar::ratio: zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::imag_ratio(long p, long q) {
  if (q == 0) throw std::invalid_argument("Scalar::imag_ratio: zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  return Scalar(mpq_class(0), r);
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::inverse() const {
  mpq_class n = norm();
  if (n == 0) throw std::domain_error("Scalar::inverse: division by zero");
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar acc(1), base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string rat_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re_ != 0) out += rat_str(re_);
  if (im_ != 0) {
    if (re_ != 0 && im_ > 0) out += "+";
    if (im_ == 1) {
      out += "i";
    } else if (im_ == -1) {
      out += "-i";
    } else {
      out += rat_str(im_) + "*i";
    }
  }
  return out;
}

namespace {

// One signed rational, optionally followed by "*i" or bare "i" ("3i", "i").
// Returns {value, is_imaginary, chars consumed} or nullopt.
struct RatTok {
  mpq_class value;
  bool imag;
  size_t len;
};

std::optional<RatTok> lex_rat(std::string_view s) {
  size_t k = 0;
  bool neg = false;
  if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
    neg = s[k] == '-';
    ++k;
  }
  if (k < s.size() && s[k] == 'i' &&
      (k + 1 == s.size() || s[k + 1] == '+' || s[k + 1] == '-')) {
    return RatTok{mpq_class(neg ? -1 : 1), true, k + 1};
  }
  size_t d0 = k;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
  if (k == d0) return std::nullopt;
  std::string num(s.substr(d0, k - d0));
  std::string den = "1";
  if (k < s.size() && s[k] == '/') {
    size_t d1 = ++k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == d1) return std::nullopt;
    den = std::string(s.substr(d1, k - d1));
  }
  bool imag = false;
  if (k < s.size() && s[k] == '*' && k + 1 < s.size() && s[k + 1] == 'i') {
    imag = true;
    k += 2;
  } else if (k < s.size() && s[k] == 'i') {
    imag = true;
    ++k;
  }
  mpq_class v(num + "/" + den);
  v.canonicalize();
  if (neg) v = -v;
  return RatTok{v, imag, k};
}

}  // namespace

std::optional<Scalar> Scalar::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  mpq_class re(0), im(0);
  size_t pos = 0;
  int parts = 0;
  while (pos < text.size()) {
    auto tok = lex_rat(text.substr(pos));
    if (!tok || tok->len == 0 || ++parts > 2) return std::nullopt;
    (tok->imag ? im : re) += tok->value;
    pos += tok->len;
  }
  return Scalar(re, im);
}

std::optional<mpq_class> sqrt_exact(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return mpq_class(0);
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<mpq_class> abs_exact(const Scalar& s) { return sqrt_exact(s.norm()); }

}  // namespace crlc
