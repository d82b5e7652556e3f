#include "crlc/poly.hpp"

namespace crlc {

namespace {

// Splits p = p0 + sqrt2 * p1 with both parts sqrt2-free.
template <class K>
std::pair<PolyT<K>, PolyT<K>> split_sqrt2(const PolyT<K>& p) {
  PolyT<K> p0(p.alphabet()), p1(p.alphabet());
  for (const auto& [m, c] : p.terms()) {
    Mono q = m;
    q.r2 = 0;
    (m.r2 ? p1 : p0).add_term(q, c);
  }
  return {p0, p1};
}

// Exact division for sqrt2-free operands. Leading-term elimination in the
// canonical order; the order is multiplicative, so divisibility of p by d
// forces LT(d) | LT(p) at every step.
template <class K>
std::optional<PolyT<K>> exact_divide_plain(PolyT<K> p, const PolyT<K>& d) {
  if (d.is_zero()) return std::nullopt;
  PolyT<K> q(p.alphabet());
  const auto& dlt = *d.terms().rbegin();
  while (!p.is_zero()) {
    const auto& plt = *p.terms().rbegin();
    Mono qm;
    bool ok = plt.first.wdeg >= dlt.first.wdeg;
    if (ok) {
      qm.wdeg = plt.first.wdeg - dlt.first.wdeg;
      for (int k = 0; k < kMaxVars; ++k) {
        if (plt.first.e[k] < dlt.first.e[k]) {
          ok = false;
          break;
        }
        qm.e[k] = plt.first.e[k] - dlt.first.e[k];
      }
    }
    if (!ok) return std::nullopt;
    K qc = [&] {
      if constexpr (std::is_same_v<K, Scalar>) {
        return plt.second / dlt.second;
      } else {
        return plt.second / dlt.second;
      }
    }();
    PolyT<K> qterm(p.alphabet());
    qterm.add_term(qm, qc);
    q += qterm;
    p -= qterm * d;
  }
  return q;
}

}  // namespace

template <class K>
std::optional<PolyT<K>> exact_divide(const PolyT<K>& p, const PolyT<K>& d) {
  for (const auto& [m, c] : d.terms())
    if (m.r2) throw std::invalid_argument("exact_divide: divisor must be sqrt2-free");
  auto [p0, p1] = split_sqrt2(p);
  auto q0 = exact_divide_plain(p0, d);
  if (!q0) return std::nullopt;
  if (p1.is_zero()) return q0;
  auto q1 = exact_divide_plain(p1, d);
  if (!q1) return std::nullopt;
  PolyT<K> r2 = PolyT<K>::sqrt2(p.alphabet(), [&] {
    if constexpr (std::is_same_v<K, Scalar>) {
      return Scalar(1);
    } else {
      return K::from_long(1, 128);
    }
  }());
  return *q0 + r2 * *q1;
}

template <class K>
std::pair<PolyT<K>, PolyT<K>> divide_linear(const PolyT<K>& p, int var, const PolyT<K>& r) {
  if (r.degree_in(var) > 0)
    throw std::invalid_argument("divide_linear: root expression involves the variable");
  auto coeffs = p.collect(var);
  const int n = static_cast<int>(coeffs.size()) - 1;
  PolyT<K> xv = PolyT<K>::var(p.alphabet(), p.alphabet()->vars[var], [&] {
    if constexpr (std::is_same_v<K, Scalar>) {
      return Scalar(1);
    } else {
      return K::from_long(1, 128);
    }
  }());
  // synthetic division: b_{n-1} = c_n, b_{k-1} = c_k + r b_k, rem = c_0 + r b_0
  PolyT<K> quotient(p.alphabet());
  PolyT<K> carry(p.alphabet());
  for (int k = n; k >= 1; --k) {
    carry = k == n ? coeffs[k] : coeffs[k] + r * carry;
    quotient += carry * xv.pow(k - 1);
  }
  PolyT<K> rem = n >= 1 ? coeffs[0] + r * carry : coeffs.empty() ? PolyT<K>(p.alphabet()) : coeffs[0];
  return {quotient, rem};
}

Poly pseudo_remainder(const Poly& p, const Poly& d, int var) {
  const int dd = d.degree_in(var);
  if (dd == 0) throw std::invalid_argument("pseudo_remainder: divisor free of variable");
  auto dcoef = d.collect(var);
  const Poly& lead = dcoef[dd];
  Poly xv = Poly::var(p.alphabet(), p.alphabet()->vars[var], Scalar(1));
  Poly rem = p;
  while (rem.degree_in(var) >= dd) {
    auto rcoef = rem.collect(var);
    int rd = static_cast<int>(rcoef.size()) - 1;
    rem = rem * lead - rcoef[rd] * xv.pow(rd - dd) * d;
  }
  return rem;
}

NumPoly to_numeric(const Poly& p, mpfr_prec_t prec) {
  NumPoly out(p.alphabet());
  for (const auto& [m, c] : p.terms()) {
    NumComplex nc(c, prec);
    Mono q = m;
    if (m.r2) {
      nc = CoeffOps<NumComplex>::mul_sqrt2(nc);
      q.r2 = 0;
    }
    out.add_term(q, nc);
  }
  return out;
}

template class PolyT<Scalar>;
template class PolyT<NumComplex>;

template std::optional<PolyT<Scalar>> exact_divide(const PolyT<Scalar>&, const PolyT<Scalar>&);
template std::optional<PolyT<NumComplex>> exact_divide(const PolyT<NumComplex>&,
                                                       const PolyT<NumComplex>&);
template std::pair<PolyT<Scalar>, PolyT<Scalar>> divide_linear(const PolyT<Scalar>&, int,
                                                               const PolyT<Scalar>&);
template std::pair<PolyT<NumComplex>, PolyT<NumComplex>> divide_linear(const PolyT<NumComplex>&,
                                                                       int,
                                                                       const PolyT<NumComplex>&);

}  // namespace crlc
