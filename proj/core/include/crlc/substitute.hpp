#pragma once

#include <map>
#include <string>

#include "crlc/series.hpp"

namespace crlc {

namespace detail {

template <class P>
class PowCache {
 public:
  explicit PowCache(const P& base) { pows_.push_back({}); base_ = &base; }
  const P& get(int k, int64_t cutoff = -1) {
    while (static_cast<int>(pows_.size()) <= k) {
      if (pows_.size() == 1) {
        pows_.push_back(*base_);
      } else {
        pows_.push_back(mul_step(pows_.back(), cutoff));
      }
    }
    return pows_[k];
  }

 private:
  P mul_step(const P& acc, int64_t cutoff) {
    if constexpr (requires(const P& a, const P& b, int64_t c) { a.mul(b, c); }) {
      return acc.mul(*base_, cutoff);
    } else {
      return acc * *base_;
    }
  }
  const P* base_;
  std::vector<P> pows_;  // pows_[0] unused placeholder
};

}  // namespace detail

/// Substitutes polynomial values for variables. Every variable of p that is
/// not bound must exist (same name) in the output alphabet. If no binding is
/// given, returns p unchanged.
template <class K>
PolyT<K> substitute(const PolyT<K>& p, const std::map<std::string, PolyT<K>>& bindings) {
  if (bindings.empty()) return p;
  AlphabetPtr out_alpha = bindings.begin()->second.alphabet();
  for (const auto& [v, val] : bindings) {
    if (val.alphabet() != out_alpha)
      throw std::invalid_argument("substitute: bindings mix alphabets");
    if (!p.alphabet()->has(v))
      throw std::invalid_argument("substitute: variable '" + v + "' not in alphabet");
  }
  const auto& in = *p.alphabet();
  std::vector<const PolyT<K>*> bound(in.size(), nullptr);
  for (int k = 0; k < in.size(); ++k) {
    auto it = bindings.find(in.vars[k]);
    if (it != bindings.end()) bound[k] = &it->second;
  }
  std::vector<std::unique_ptr<detail::PowCache<PolyT<K>>>> cache(in.size());

  PolyT<K> result(out_alpha);
  for (const auto& [m, c] : p.terms()) {
    PolyT<K> term(out_alpha, c);
    if (m.r2) term = term * PolyT<K>::sqrt2(out_alpha, detail::coeff_one(term));
    for (int k = 0; k < in.size(); ++k) {
      if (m.e[k] == 0) continue;
      if (bound[k]) {
        if (!cache[k]) cache[k] = std::make_unique<detail::PowCache<PolyT<K>>>(*bound[k]);
        term = term * cache[k]->get(m.e[k]);
      } else {
        if (!out_alpha->has(in.vars[k]))
          throw std::invalid_argument("substitute: unbound variable '" + in.vars[k] +
                                      "' missing from target alphabet");
        PolyT<K> v = PolyT<K>::var(out_alpha, in.vars[k], detail::coeff_one(term));
        term = term * v.pow(m.e[k]);
      }
    }
    result += term;
  }
  return result;
}

template <class K>
struct RationalBinding {
  PolyT<K> num;
  PolyT<K> den;
};

template <class K>
struct ClearedResult {
  PolyT<K> value;    // cleared numerator
  PolyT<K> cleared;  // factor: cleared * (exact substitution) == value
};

/// Substitutes rational values var -> num/den, clearing denominators.
/// The returned factor is prod den_v^(deg_v p).
template <class K>
ClearedResult<K> substitute_rational(const PolyT<K>& p,
                                     const std::map<std::string, RationalBinding<K>>& bindings) {
  if (bindings.empty()) return {p, PolyT<K>(p.alphabet(), detail::coeff_one(p))};
  AlphabetPtr out_alpha = bindings.begin()->second.num.alphabet();
  const auto& in = *p.alphabet();
  std::vector<const RationalBinding<K>*> bound(in.size(), nullptr);
  std::vector<int> maxdeg(in.size(), 0);
  for (int k = 0; k < in.size(); ++k) {
    auto it = bindings.find(in.vars[k]);
    if (it != bindings.end()) {
      if (it->second.num.alphabet() != out_alpha || it->second.den.alphabet() != out_alpha)
        throw std::invalid_argument("substitute_rational: bindings mix alphabets");
      bound[k] = &it->second;
      maxdeg[k] = p.degree_in(k);
    }
  }
  std::vector<std::unique_ptr<detail::PowCache<PolyT<K>>>> num_cache(in.size());
  std::vector<std::unique_ptr<detail::PowCache<PolyT<K>>>> den_cache(in.size());
  for (int k = 0; k < in.size(); ++k) {
    if (!bound[k]) continue;
    num_cache[k] = std::make_unique<detail::PowCache<PolyT<K>>>(bound[k]->num);
    den_cache[k] = std::make_unique<detail::PowCache<PolyT<K>>>(bound[k]->den);
  }

  PolyT<K> result(out_alpha);
  for (const auto& [m, c] : p.terms()) {
    PolyT<K> term(out_alpha, c);
    if (m.r2) term = term * PolyT<K>::sqrt2(out_alpha, detail::coeff_one(term));
    for (int k = 0; k < in.size(); ++k) {
      if (bound[k]) {
        if (m.e[k] > 0) term = term * num_cache[k]->get(m.e[k]);
        int deficit = maxdeg[k] - m.e[k];
        if (deficit > 0) term = term * den_cache[k]->get(deficit);
      } else if (m.e[k] > 0) {
        PolyT<K> v = PolyT<K>::var(out_alpha, in.vars[k], detail::coeff_one(term));
        term = term * v.pow(m.e[k]);
      }
    }
    result += term;
  }
  PolyT<K> cleared(out_alpha, detail::coeff_one(p));
  for (int k = 0; k < in.size(); ++k)
    if (bound[k] && maxdeg[k] > 0) cleared = cleared * den_cache[k]->get(maxdeg[k]);
  return {result, cleared};
}

/// Rational substitution applied jointly to several polynomials with one
/// shared clearing factor, so ratios of the results equal ratios of the
/// exact substitutions. Bindings with equal denominators are cleared as a
/// group by the max total degree, which keeps composition chains from
/// inflating degrees.
template <class K>
std::pair<std::vector<PolyT<K>>, PolyT<K>> substitute_rational_multi(
    const std::vector<PolyT<K>>& polys,
    const std::map<std::string, RationalBinding<K>>& bindings) {
  if (polys.empty()) throw std::invalid_argument("substitute_rational_multi: no inputs");
  const auto& in = *polys.front().alphabet();
  AlphabetPtr out_alpha =
      bindings.empty() ? polys.front().alphabet() : bindings.begin()->second.num.alphabet();
  std::vector<const RationalBinding<K>*> bound(in.size(), nullptr);
  for (int k = 0; k < in.size(); ++k) {
    auto it = bindings.find(in.vars[k]);
    if (it != bindings.end()) bound[k] = &it->second;
  }
  // group variables by equal denominator
  std::vector<int> group(in.size(), -1);
  std::vector<int> group_head;
  for (int k = 0; k < in.size(); ++k) {
    if (!bound[k]) continue;
    for (int h : group_head) {
      if (bound[h]->den == bound[k]->den) {
        group[k] = group[h];
        break;
      }
    }
    if (group[k] < 0) {
      group[k] = static_cast<int>(group_head.size());
      group_head.push_back(k);
    }
  }
  const int ngroups = static_cast<int>(group_head.size());
  std::vector<int> maxtot(ngroups, 0);
  for (const auto& p : polys) {
    if (p.alphabet() != polys.front().alphabet())
      throw std::invalid_argument("substitute_rational_multi: inputs mix alphabets");
    for (const auto& [m, c] : p.terms()) {
      std::vector<int> tot(ngroups, 0);
      for (int k = 0; k < in.size(); ++k)
        if (bound[k]) tot[group[k]] += m.e[k];
      for (int g = 0; g < ngroups; ++g) maxtot[g] = std::max(maxtot[g], tot[g]);
    }
  }
  std::vector<std::unique_ptr<detail::PowCache<PolyT<K>>>> num_cache(in.size());
  std::vector<std::unique_ptr<detail::PowCache<PolyT<K>>>> den_cache(ngroups);
  for (int k = 0; k < in.size(); ++k)
    if (bound[k]) num_cache[k] = std::make_unique<detail::PowCache<PolyT<K>>>(bound[k]->num);
  for (int g = 0; g < ngroups; ++g)
    den_cache[g] = std::make_unique<detail::PowCache<PolyT<K>>>(bound[group_head[g]]->den);

  std::vector<PolyT<K>> results;
  results.reserve(polys.size());
  K one = detail::coeff_one(polys.front());
  for (const auto& p : polys) {
    PolyT<K> result(out_alpha);
    for (const auto& [m, c] : p.terms()) {
      PolyT<K> term(out_alpha, c);
      if (m.r2) term = term * PolyT<K>::sqrt2(out_alpha, one);
      std::vector<int> tot(ngroups, 0);
      for (int k = 0; k < in.size(); ++k) {
        if (bound[k]) {
          tot[group[k]] += m.e[k];
          if (m.e[k] > 0) term = term * num_cache[k]->get(m.e[k]);
        } else if (m.e[k] > 0) {
          PolyT<K> v = PolyT<K>::var(out_alpha, in.vars[k], one);
          term = term * v.pow(m.e[k]);
        }
      }
      for (int g = 0; g < ngroups; ++g) {
        int deficit = maxtot[g] - tot[g];
        if (deficit > 0) term = term * den_cache[g]->get(deficit);
      }
      result += term;
    }
    results.push_back(std::move(result));
  }
  PolyT<K> cleared(out_alpha, one);
  for (int g = 0; g < ngroups; ++g)
    if (maxtot[g] > 0) cleared = cleared * den_cache[g]->get(maxtot[g]);
  return {std::move(results), std::move(cleared)};
}

/// Substitutes truncated series for every variable occurring in p; the
/// result order is the minimum binding order.
template <class K>
SeriesT<K> substitute_series(const PolyT<K>& p,
                             const std::map<std::string, SeriesT<K>>& bindings) {
  if (bindings.empty()) throw std::invalid_argument("substitute_series: no bindings");
  AlphabetPtr out_alpha = bindings.begin()->second.alphabet();
  int order = bindings.begin()->second.order();
  for (const auto& [v, s] : bindings) {
    if (s.alphabet() != out_alpha)
      throw std::invalid_argument("substitute_series: bindings mix alphabets");
    order = std::min(order, s.order());
  }
  const auto& in = *p.alphabet();
  std::vector<const SeriesT<K>*> bound(in.size(), nullptr);
  for (int k = 0; k < in.size(); ++k) {
    auto it = bindings.find(in.vars[k]);
    if (it != bindings.end()) bound[k] = &it->second;
  }
  std::vector<std::unique_ptr<detail::PowCache<PolyT<K>>>> cache(in.size());

  PolyT<K> result(out_alpha);
  for (const auto& [m, c] : p.terms()) {
    PolyT<K> term(out_alpha, c);
    if (m.r2) term = term * PolyT<K>::sqrt2(out_alpha, detail::coeff_one(term));
    for (int k = 0; k < in.size(); ++k) {
      if (m.e[k] == 0) continue;
      if (!bound[k])
        throw std::invalid_argument("substitute_series: unbound variable " + in.vars[k]);
      if (!cache[k])
        cache[k] = std::make_unique<detail::PowCache<PolyT<K>>>(bound[k]->body());
      term = term.mul(cache[k]->get(m.e[k], order), order);
      if (term.is_zero()) break;
    }
    result += term;
  }
  return SeriesT<K>(result, order);
}

/// Series template: same as above, but the template itself is truncated.
/// Each binding must have valuation >= the weight of its variable, so the
/// template's dropped tail stays above the truncation order.
template <class K>
SeriesT<K> substitute_series(const SeriesT<K>& templ,
                             const std::map<std::string, SeriesT<K>>& bindings) {
  for (const auto& [v, s] : bindings) {
    int idx = templ.alphabet()->index_of(v);
    if (!s.is_zero() &&
        s.body().low_weight() < static_cast<uint32_t>(templ.alphabet()->weight[idx]))
      throw std::invalid_argument("substitute_series: binding '" + v +
                                  "' has valuation below the variable weight");
  }
  SeriesT<K> out = substitute_series(templ.body(), bindings);
  return out.truncated(templ.order());
}

/// In-alphabet substitution of one variable by a polynomial inside a series.
/// Requires low_weight(value) >= weight(var) so truncation stays sound.
template <class K>
SeriesT<K> series_substitute_var(const SeriesT<K>& s, const std::string& var,
                                 const PolyT<K>& value) {
  int idx = s.alphabet()->index_of(var);
  if (!value.is_zero() &&
      value.low_weight() < static_cast<uint32_t>(s.alphabet()->weight[idx]))
    throw std::invalid_argument(
        "series_substitute_var: binding valuation below variable weight");
  auto coeffs = s.body().collect(idx);
  PolyT<K> acc(s.alphabet());
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    acc = acc.mul(value, s.order()) + coeffs[k];
  return SeriesT<K>(acc, s.order());
}

}  // namespace crlc
