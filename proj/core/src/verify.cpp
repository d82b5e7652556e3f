#include "crlc/verify.hpp"

#include <stdexcept>

namespace crlc {

namespace {

std::string leading_term_str(const Poly& p) {
  if (p.is_zero()) return "";
  const auto& [m, c] = *p.terms().begin();
  Poly one_term(p.alphabet());
  one_term.add_term(m, c);
  return one_term.str();
}

// Bindings target-var -> component (and conjugates) over the source alphabet.
std::map<std::string, RationalBinding<Scalar>> pullback_bindings(const RationalMap& H) {
  const auto& tgt = surface(H.target());
  std::map<std::string, RationalBinding<Scalar>> b;
  for (int k = 0; k < tgt.ambient_dim; ++k) {
    const auto& comp = H.comps()[k];
    b.emplace(tgt.holo_vars()[k], RationalBinding<Scalar>{comp.num, comp.den});
    b.emplace(tgt.alpha->vars[tgt.alpha->conj[tgt.alpha->index_of(tgt.holo_vars()[k])]],
              RationalBinding<Scalar>{comp.num.conj(), comp.den.conj()});
  }
  return b;
}

// Value of a constant polynomial c = a + b*sqrt2 compared against a rational
// bound: sign of (a - bound) + b*sqrt2, with a, b required real.
int quad_sign(const Poly& value, const mpq_class& bound) {
  Scalar a = value.constant_term(Scalar(0));
  Scalar b = value.sqrt2_term(Scalar(0));
  if (!a.is_real() || !b.is_real())
    throw std::domain_error("quad_sign: value is not real");
  mpq_class c = a.re() - bound;
  mpq_class d = b.re();
  int sc = sgn(c), sd = sgn(d);
  if (sd == 0) return sc;
  if (sc == 0) return sd;
  if (sc == sd) return sc;
  // mixed signs: compare c^2 against 2 d^2
  mpq_class c2 = c * c, d2 = 2 * d * d;
  if (c2 == d2) return 0;
  return c2 > d2 ? sc : sd;
}

void check_image_smooth(const RationalMap& H, const std::vector<Scalar>& point) {
  const auto& src = surface(H.source());
  if (H.target() == Surface::X) {
    // smooth part requires |zeta| < 1
    const auto& c = H.comps()[1];
    Poly n = eval_point(c.num, src.alpha, point);
    Poly d = eval_point(c.den, src.alpha, point);
    Poly zeta = constant_inverse(d) * n;
    Poly mod2 = zeta * zeta.conj();
    if (quad_sign(mod2, 1) >= 0)
      throw std::domain_error("image point lies outside the smooth part of X");
  } else if (H.target() == Surface::D4) {
    // smooth boundary part requires |Z Z^t| < 1
    Poly zz(src.alpha);
    for (const auto& c : H.comps()) {
      Poly n = eval_point(c.num, src.alpha, point);
      Poly d = eval_point(c.den, src.alpha, point);
      Poly v = constant_inverse(d) * n;
      zz += v * v;
    }
    Poly mod2 = zz * zz.conj();
    if (quad_sign(mod2, 1) >= 0)
      throw std::domain_error("image point lies in the singular part of the type-IV boundary");
  }
}

}  // namespace

PulledBack pull_back_defining(const RationalMap& H, bool normalized) {
  const auto& tgt = surface(H.target());
  auto bindings = pullback_bindings(H);
  const Poly& num = normalized ? tgt.normalized_num : tgt.defining_num;
  const Poly& den = normalized ? tgt.normalized_den : tgt.defining_den;
  auto [vals, cleared] = substitute_rational_multi<Scalar>({num, den}, bindings);
  (void)cleared;
  return PulledBack{vals[0], vals[1]};
}

VerifyReport mapping_residual(const RationalMap& H) {
  const auto& src = surface(H.source());
  VerifyReport rep;
  rep.mode = "exact";
  rep.map_name = H.name();
  rep.source = H.source();
  rep.target = H.target();
  PulledBack pb = pull_back_defining(H);
  Poly residual;
  if (src.solved_var >= 0) {
    residual = segre_complexify(pb.num, src);
  } else {
    // quadric source (D4): reduce modulo the defining polynomial instead
    residual = pseudo_remainder(pb.num, src.defining_num, src.alpha->index_of("z1b"));
  }
  rep.residual = residual;
  rep.status = residual.is_zero() ? VerifyStatus::Pass : VerifyStatus::Fail;
  rep.residual_leading = leading_term_str(residual);
  return rep;
}

VerifyReport mapping_residual(const MapGerm& germ, int order) {
  VerifyReport rep;
  rep.mode = "series";
  rep.order = order;
  rep.source = Surface::H3;
  rep.target = Surface::X;
  const auto& x = surface(Surface::X);
  const auto& h3 = surface(Surface::H3);
  MapGerm g = germ.truncated(order);
  std::map<std::string, Series> bindings{
      {"z", g.f},           {"zeta", g.phi},          {"w", g.g},
      {"zb", g.f.conj()},   {"zetab", g.phi.conj()},  {"wb", g.g.conj()}};
  Series pulled = substitute_series(x.defining_num, bindings);
  Series residual = series_substitute_var(pulled, "w", h3.rule_num);
  rep.residual = residual.body();
  rep.status = residual.is_zero() ? VerifyStatus::Pass : VerifyStatus::Fail;
  rep.residual_leading = leading_term_str(residual.body());
  return rep;
}

VerifyReport mapping_residual(const SphereGerm& germ, int order) {
  VerifyReport rep;
  rep.mode = "series";
  rep.order = order;
  rep.source = germ.source;
  rep.target = germ.target;
  const auto& tgt = surface(germ.target);
  const auto& src = surface(germ.source);
  std::map<std::string, Series> bindings;
  for (int k = 0; k < 3; ++k) {
    Series comp = germ.comps[k].truncated(order);
    bindings.emplace(tgt.holo_vars()[k], comp);
    bindings.emplace(tgt.alpha->vars[tgt.alpha->conj[tgt.alpha->index_of(tgt.holo_vars()[k])]],
                     comp.conj());
  }
  Series pulled = substitute_series(tgt.defining_num, bindings);
  // interior germ: the membership statement is the unit-quotient identity
  Series diff = pulled - Series(src.defining_num, pulled.order());
  rep.residual = diff.body();
  rep.status = diff.is_zero() ? VerifyStatus::Pass : VerifyStatus::Fail;
  rep.residual_leading = leading_term_str(diff.body());
  return rep;
}

VerifyReport mapping_residual(const CatalogValue& v, bool series_mode, int order) {
  if (std::holds_alternative<RationalMap>(v)) {
    const auto& m = std::get<RationalMap>(v);
    if (!series_mode) return mapping_residual(m);
    return mapping_residual(taylor_germ(m, order), order);
  }
  if (std::holds_alternative<MapGerm>(v)) return mapping_residual(std::get<MapGerm>(v), order);
  return mapping_residual(std::get<SphereGerm>(v), order);
}

std::pair<Poly, Poly> quotient_Q(const RationalMap& H, bool normalized) {
  const auto& src = surface(H.source());
  PulledBack pb = pull_back_defining(H, normalized);
  auto q = exact_divide(pb.num, src.defining_num);
  if (!q)
    throw std::logic_error(
        "quotient_Q: source defining polynomial does not divide the pull-back "
        "(mapping equation fails?)");
  Poly qnum = *q * src.defining_den;
  return {qnum, pb.den};
}

Transversality transversality(const RationalMap& H, const std::vector<Scalar>& point) {
  const auto& src = surface(H.source());
  if (!on_surface(src, point))
    throw std::invalid_argument("transversality: point not on the source hypersurface");
  check_image_smooth(H, point);
  auto [qn, qd] = quotient_Q(H);
  Poly n = eval_point(qn, src.alpha, point);
  Poly d = eval_point(qd, src.alpha, point);
  if (d.is_zero()) throw std::domain_error("transversality: quotient denominator vanishes");
  Poly q = constant_inverse(d) * n;
  Transversality t;
  t.transversal = !q.is_zero();
  if (q.sqrt2_term(Scalar(0)).is_zero()) t.witness = q.constant_term(Scalar(0));
  return t;
}

Transversality transversality(const MapGerm& germ) {
  Transversality t;
  t.witness = germ.jet(2, 0, 1);
  t.transversal = !t.witness.is_zero();
  return t;
}

namespace {

// Mixed log-Hessian of num/den at the point, contracted with the field:
//   sum_{i,j} C_i conj(C_j) d_i d_jbar log(num/den).
Scalar log_hessian_contraction(const Poly& num, const Poly& den, const AlphabetPtr& alpha,
                               const std::vector<Scalar>& point, const CRField& field) {
  auto hess_part = [&](const Poly& p, int i, int jb) {
    Poly v = eval_point(p, alpha, point);
    Poly vi = eval_point(p.derivative(i), alpha, point);
    Poly vj = eval_point(p.derivative(jb), alpha, point);
    Poly vij = eval_point(p.derivative(i).derivative(jb), alpha, point);
    Poly numpart = v * vij - vi * vj;
    Poly den2 = v * v;
    return constant_inverse(den2) * numpart;
  };
  Poly acc(alpha);
  for (const auto& [vi, ci] : field.coeffs) {
    for (const auto& [vj, cj] : field.coeffs) {
      int jb = alpha->conj[vj];
      Poly coeff = eval_point(ci, alpha, point) * eval_point(cj, alpha, point).conj();
      Poly term = hess_part(num, vi, jb) - hess_part(den, vi, jb);
      acc += coeff * term;
    }
  }
  if (!acc.sqrt2_term(Scalar(0)).is_zero())
    throw std::domain_error("ahlfors: value leaves Q(i)");
  return acc.constant_term(Scalar(0));
}

}  // namespace

Scalar ahlfors(const RationalMap& H, const std::vector<Scalar>& point, const CRField& field) {
  const auto& src = surface(H.source());
  auto t = transversality(H, point);
  if (!t.transversal) throw std::domain_error("ahlfors: map is not transversal at the point");
  auto [qn, qd] = quotient_Q(H, /*normalized=*/true);
  return log_hessian_contraction(qn, qd, src.alpha, point, field);
}

Series series_quotient_normalized(const MapGerm& germ) {
  const auto& x = surface(Surface::X);
  const auto& h3 = surface(Surface::H3);
  std::map<std::string, Series> bindings{
      {"z", germ.f},          {"zeta", germ.phi},          {"w", germ.g},
      {"zb", germ.f.conj()},  {"zetab", germ.phi.conj()},  {"wb", germ.g.conj()}};
  Series pulled = substitute_series(x.normalized_num, bindings);
  // divide by rho_H3 = (w - wb - 2i z zb) / (2i), exactly
  int widx = h3.alpha->index_of("w");
  auto [q, rem] = divide_linear(pulled.body(), widx, h3.rule_num);
  if (!rem.truncated(pulled.order()).is_zero())
    throw std::logic_error("series quotient: residual nonzero, germ is not a map into X");
  Series qser(q.scaled(Scalar::imag_ratio(2, 1)), pulled.order() - 2);
  // target-side denominator (g + 2i)(conj g - 2i)
  Scalar i2 = Scalar::imag_ratio(2, 1);
  Series gp = germ.g + Series(Poly(germ.alphabet(), i2), germ.order());
  Series gm = germ.g.conj() - Series(Poly(germ.alphabet(), i2), germ.order());
  Series den = (gp * gm).truncated(qser.order());
  return qser * series_inverse(den);
}

Scalar ahlfors_germ(const MapGerm& germ) {
  auto t = transversality(germ);
  if (!t.transversal) throw std::domain_error("ahlfors: germ is not transversal at 0");
  Series q = series_quotient_normalized(germ);
  const auto& alpha = germ.alphabet();
  int zi = alpha->index_of("z"), zbi = alpha->index_of("zb");
  auto at0 = [&](const Series& s) { return s.body().constant_term(Scalar(0)); };
  Scalar q0 = at0(q);
  Scalar qz = at0(q.derivative(zi));
  Scalar qzb = at0(q.derivative(zbi));
  Scalar qzzb = at0(q.derivative(zi).derivative(zbi));
  // L = d/dz + 2i zb d/dw has coefficients (1, 2i zb) = (1, 0) at 0
  return (q0 * qzzb - qz * qzb) / (q0 * q0);
}

int geometric_rank(const RationalMap& H, const std::vector<Scalar>& point,
                   const CRField& field) {
  return ahlfors(H, point, field).is_zero() ? 0 : 1;
}

int geometric_rank(const MapGerm& germ) { return ahlfors_germ(germ).is_zero() ? 0 : 1; }

bool xy_identity(const RationalMap& H, const std::vector<MapComponent>& F) {
  if (H.comps().size() != 3)
    throw std::invalid_argument("xy_identity: H must have three components");
  const auto& alpha = surface(H.source()).alpha;
  // common denominators: work over fractions accumulated by cross-multiplying
  auto add_frac = [&](std::pair<Poly, Poly> acc, Poly n, Poly d) {
    return std::make_pair(acc.first * d + n * acc.second, acc.second * d);
  };
  std::pair<Poly, Poly> herm{Poly(alpha), Poly(alpha, Scalar(1))};
  std::pair<Poly, Poly> zz{Poly(alpha), Poly(alpha, Scalar(1))};
  for (const auto& c : H.comps()) {
    herm = add_frac(herm, c.num * c.num.conj(), c.den * c.den.conj());
    zz = add_frac(zz, c.num * c.num, c.den * c.den);
  }
  std::pair<Poly, Poly> ff{Poly(alpha), Poly(alpha, Scalar(1))};
  for (const auto& c : F) {
    if (c.num.alphabet() != alpha)
      throw std::invalid_argument("xy_identity: F components must share H's source alphabet");
    ff = add_frac(ff, c.num * c.num.conj(), c.den * c.den.conj());
  }
  // 2 herm - zz * conj(zz) - ff == 0
  Poly zzbar_num = zz.first.conj();
  Poly zzbar_den = zz.second.conj();
  // lhs = 2 herm.n/herm.d - zz.n*zzb.n/(zz.d*zzb.d) - ff.n/ff.d
  Poly d_all = herm.second * zz.second * zzbar_den * ff.second;
  Poly lhs = herm.first.scaled_long(2) * zz.second * zzbar_den * ff.second -
             zz.first * zzbar_num * herm.second * ff.second -
             ff.first * herm.second * zz.second * zzbar_den;
  return lhs.is_zero();
}

}  // namespace crlc
