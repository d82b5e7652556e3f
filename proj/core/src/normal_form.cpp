#include "crlc/normal_form.hpp"

#include <sstream>
#include <stdexcept>

#include "crlc/automorphisms.hpp"

namespace crlc {

std::string class_name(ClassKind k) {
  switch (k) {
    case ClassKind::Linear_ell: return "Linear_ell";
    case ClassKind::R_plus: return "R_plus";
    case ClassKind::R_minus: return "R_minus";
    case ClassKind::Iota: return "Iota";
    case ClassKind::Nontransversal: return "Nontransversal";
  }
  return "?";
}

namespace {

template <class K>
struct GermT {
  SeriesT<K> f, phi, g;
};

// Everything below works over constant polynomials so that ring values
// (a + b sqrt2 with Gaussian rational a, b) can serve as parameters.
template <class K>
class Pipeline {
 public:
  explicit Pipeline(GermT<K> h) : h_(std::move(h)) {
    alpha_ = h_.f.alphabet();
    order_ = h_.f.order();
    K sample = CoeffOps<K>::one(first_coeff());
    one_ = PolyT<K>(alpha_, sample);
    i_ = PolyT<K>(alpha_, CoeffOps<K>::imag_unit(sample));
  }

  const GermT<K>& germ() const { return h_; }
  const std::string& steps() const { return steps_; }

  PolyT<K> jet(int comp, int a, int b) const {
    const SeriesT<K>& s = comp == 0 ? h_.f : comp == 1 ? h_.phi : h_.g;
    Mono m;
    m.e[alpha_->index_of("z")] = static_cast<uint16_t>(a);
    m.e[alpha_->index_of("w")] = static_cast<uint16_t>(b);
    m.wdeg = static_cast<uint32_t>(a + 2 * b);
    PolyT<K> out(alpha_);
    K c = s.body().coeff(m, K{});
    if (!CoeffOps<K>::is_zero(c)) out += PolyT<K>(alpha_, c);
    Mono m2 = m;
    m2.r2 = 1;
    K c2 = s.body().coeff(m2, K{});
    if (!CoeffOps<K>::is_zero(c2)) out += PolyT<K>::sqrt2(alpha_, c2);
    return out;
  }

  // psi_{a,t,u,lambda} o h with constant parameters; lu = lambda*u,
  // l2 = lambda^2, u2 = u^2.
  void target_step(const PolyT<K>& a, const PolyT<K>& t, const PolyT<K>& lu,
                   const PolyT<K>& l2, const PolyT<K>& u2) {
    PolyT<K> ab = a.conj();
    PolyT<K> na = a * ab;
    SeriesT<K> v = h_.g * h_.phi + h_.f * h_.f * cs(i_);
    SeriesT<K> delta = cs(one_) - h_.f * cs((i_ * ab).scaled_long(2)) -
                       h_.g * cs(t + i_ * na) + v * cs(i_ * ab * ab);
    SeriesT<K> dinv = series_inverse(delta);
    SeriesT<K> fnew = (h_.f + h_.g * cs(a) - v * cs(ab)) * cs(lu) * dinv;
    SeriesT<K> pnew =
        (h_.phi - h_.f * cs((i_ * a).scaled_long(2)) - h_.g * cs(i_ * a * a) - v * cs(t - i_ * na)) *
        cs(u2) * dinv;
    SeriesT<K> gnew = h_.g * cs(l2) * dinv;
    h_ = GermT<K>{fnew, pnew, gnew};
  }

  // h o gamma_{c,r,u,lambda} with constant parameters; the dilation enters
  // only through lu = lambda*u and l2 = lambda^2.
  void source_step(const PolyT<K>& c, const PolyT<K>& r, const PolyT<K>& lu,
                   const PolyT<K>& l2) {
    PolyT<K> cb = c.conj();
    PolyT<K> nc = c * cb;
    PolyT<K> z = PolyT<K>::var(alpha_, "z", one_.constant_term(K{}));
    PolyT<K> w = PolyT<K>::var(alpha_, "w", one_.constant_term(K{}));
    SeriesT<K> zs(z, order_), ws(w, order_);
    SeriesT<K> den = cs(one_) - zs * cs((i_ * cb).scaled_long(2)) + ws * cs(r - i_ * nc);
    SeriesT<K> dinv = series_inverse(den);
    SeriesT<K> znew = (zs + ws * cs(c)) * cs(lu) * dinv;
    SeriesT<K> wnew = ws * cs(l2) * dinv;
    std::map<std::string, SeriesT<K>> bind{{"z", znew}, {"w", wnew}};
    h_ = GermT<K>{substitute_series(h_.f, bind), substitute_series(h_.phi, bind),
                  substitute_series(h_.g, bind)};
  }

  void note(const std::string& s) { steps_ += steps_.empty() ? s : "; " + s; }

  // The four normalization stages. Requires f_z(0) != 0.
  void run() {
    PolyT<K> f10 = jet(0, 1, 0);
    PolyT<K> phi10 = jet(1, 1, 0);
    if (f10.is_zero()) throw std::domain_error("normal form: germ is not transversal at 0");
    // kill phi_z(0), then rescale f_z(0) to 1
    PolyT<K> a = -(i_ * phi10 * constant_inverse(f10)).scaled(half());
    target_step(a, zero(), one_, one_, one_);
    note("target a = " + a.str());
    PolyT<K> ninv = constant_inverse(f10 * f10.conj());
    PolyT<K> k = f10.conj() * ninv;
    source_step(zero(), zero(), k, ninv);
    note("source dilation k = " + k.str());
    // kill f_w(0)
    PolyT<K> f01 = jet(0, 0, 1);
    source_step(-f01, zero(), one_, one_);
    note("source c = " + (-f01).str());
    // kill g_ww(0); it is real at this stage
    PolyT<K> g02 = jet(2, 0, 2).scaled_long(2);
    check_real(g02, "g^(0,2)");
    source_step(zero(), g02.scaled(half()), one_, one_);
    note("source r = " + g02.scaled(half()).str());
    // kill Im phi_zz(0); the target t-flow must be paired with the source
    // r = t flow so that g_ww(0) and the zw coefficient of f stay put
    PolyT<K> phi20 = jet(1, 2, 0).scaled_long(2);
    PolyT<K> t = (phi20 - phi20.conj()).scaled(half()).scaled(half()) * (-i_);
    check_real(t, "t");
    target_step(zero(), t, one_, one_, one_);
    source_step(zero(), t, one_, one_);
    note("target t = source r = " + t.str());
  }


 private:
  SeriesT<K> cs(const PolyT<K>& c) const { return SeriesT<K>(c, order_); }
  PolyT<K> zero() const { return PolyT<K>(alpha_); }
  K half_k() const {
    if constexpr (std::is_same_v<K, Scalar>) {
      return Scalar::ratio(1, 2);
    } else {
      K o = CoeffOps<K>::one(first_coeff());
      return o / CoeffOps<K>::mul_long(o, 2);
    }
  }
  K first_coeff() const {
    if (!h_.f.body().terms().empty()) return h_.f.body().terms().begin()->second;
    return K{};
  }
  K half() const { return half_k(); }
  void check_real(const PolyT<K>& v, const char* what) const {
    PolyT<K> im = v - v.conj();
    if constexpr (std::is_same_v<K, Scalar>) {
      if (!im.is_zero())
        throw std::logic_error(std::string("normal form: ") + what +
                               " is not real; germ violates the mapping equation");
    } else {
      for (const auto& [m, c] : im.terms())
        if (!c.below_pow10(19))
          throw std::logic_error(std::string("normal form: ") + what + " is not real");
    }
  }

  GermT<K> h_;
  AlphabetPtr alpha_;
  int order_ = 0;
  PolyT<K> one_, i_;
  std::string steps_;
};

GermT<Scalar> to_exact_germ(const MapGerm& g) { return GermT<Scalar>{g.f, g.phi, g.g}; }

GermT<NumComplex> to_numeric_germ(const MapGerm& g, mpfr_prec_t prec) {
  auto conv = [&](const Series& s) {
    return NumSeries(to_numeric(s.body(), prec), s.order());
  };
  return GermT<NumComplex>{conv(g.f), conv(g.phi), conv(g.g)};
}

}  // namespace

NormalFormResult partial_normal_form(const MapGerm& germ) {
  if (germ.order() < 8)
    throw std::invalid_argument("partial_normal_form: germ order too small (need >= 8)");
  Pipeline<Scalar> pipe(to_exact_germ(germ));
  pipe.run();

  NormalFormResult out{NormalFormData{}, MapGerm{pipe.germ().f, pipe.germ().phi, pipe.germ().g},
                       pipe.steps()};
  NormalFormData& d = out.data;
  d.lambda = pipe.jet(1, 0, 1);
  d.alpha = pipe.jet(1, 2, 0);  // phi = ... + alpha z^2 + ...
  d.mu = pipe.jet(1, 1, 1);
  d.sigma = pipe.jet(1, 0, 2);
  d.nu = pipe.jet(0, 0, 2);
  Poly f12 = pipe.jet(0, 1, 2).scaled_long(2);  // d_z d_w^2 f at 0
  Poly f13 = pipe.jet(0, 1, 3).scaled_long(6);
  d.eta = (f12 + f12.conj()).scaled(Scalar::ratio(1, 2));
  d.xi = (f12 - f12.conj()).scaled(Scalar::ratio(1, 2) * Scalar::imag_ratio(-1, 1));
  // f^(1,3) = gamma + (3i/2) alpha eta with gamma real
  d.gamma = f13 - (d.alpha * d.eta).scaled(Scalar::imag_ratio(3, 2));
  if (!(d.gamma - d.gamma.conj()).is_zero())
    throw std::logic_error("partial_normal_form: gamma is not real");
  if (!(d.alpha - d.alpha.conj()).is_zero())
    throw std::logic_error("partial_normal_form: alpha is not real");
  // consistency of the displayed shape: f's zw coefficient equals (i/2) alpha
  Poly fzw = pipe.jet(0, 1, 1);
  if (!(fzw - d.alpha.scaled(Scalar::imag_ratio(1, 2))).is_zero())
    throw std::logic_error("partial_normal_form: f_{zw} != (i/2) alpha");

  d.lambda_final = d.lambda.is_zero() ? 0 : 1;
  if (d.lambda.is_zero() && d.mu.is_zero()) {
    // sign of a + b sqrt2 with rational a, b
    mpq_class a = d.alpha.constant_term(Scalar(0)).re();
    mpq_class b = d.alpha.sqrt2_term(Scalar(0)).re();
    int s;
    if (sgn(a) == sgn(b) || b == 0) {
      s = sgn(a + b);
    } else if (a == 0) {
      s = sgn(b);
    } else {
      mpq_class c2 = a * a, d2 = 2 * b * b;
      s = c2 == d2 ? 0 : (c2 > d2 ? sgn(a) : sgn(b));
    }
    d.alpha_final = s;
  }
  return out;
}

NumNormalFormData partial_normal_form_numeric(const MapGerm& germ, mpfr_prec_t precision) {
  Pipeline<NumComplex> pipe(to_numeric_germ(germ, precision));
  pipe.run();
  auto scalar_of = [&](const PolyT<NumComplex>& c) {
    return c.constant_term(NumComplex(precision));
  };
  NumNormalFormData d{scalar_of(pipe.jet(1, 0, 1)), scalar_of(pipe.jet(1, 2, 0)),
                      scalar_of(pipe.jet(1, 1, 1)), scalar_of(pipe.jet(0, 0, 2)),
                      scalar_of(pipe.jet(1, 0, 2)), precision};
  return d;
}

MapGerm recenter(const RationalMap& H, const std::vector<Scalar>& p, int order) {
  if (H.source() != Surface::H3 || H.target() != Surface::X)
    throw std::invalid_argument("recenter: expects an H3 -> X map");
  const auto& h3 = surface(Surface::H3);
  if (!on_surface(h3, p)) throw std::invalid_argument("recenter: point not on H3");

  RationalMap shifted = compose(H, heis_translation(p[0], p[1]));
  std::vector<Scalar> q = shifted.rational_value_at({Scalar(0), Scalar(0)});
  // image must lie in the smooth part of X
  if (q[1].norm() >= 1)
    throw std::domain_error("recenter: image point lies outside the smooth part of X");

  RationalMap current = shifted;
  Scalar zeta_q = q[1];
  if (!zeta_q.is_zero()) {
    RationalMap flow = RationalMap::identity(Surface::X);
    if (zeta_q.is_real()) {
      // lambda' flow sends zeta to ((l-1)+(l+1) zeta)/((l+1)+(l-1) zeta)
      Scalar lp = (Scalar(1) - zeta_q) / (Scalar(1) + zeta_q);
      flow = trans_dilation_lambda(lp);
    } else if (zeta_q.re() == 0) {
      Scalar s(zeta_q.im());
      Scalar mp = (Scalar(1) - s) / (Scalar(1) + s);
      flow = trans_dilation_mu(mp);
    } else {
      throw std::invalid_argument(
          "recenter: exact zeta recentering supports real or imaginary zeta only");
    }
    current = compose(flow, current);
    q = current.rational_value_at({Scalar(0), Scalar(0)});
    if (!q[1].is_zero())
      throw std::logic_error("recenter: dilation flow failed to kill zeta");
  }
  // tau_{b,r} moves (z_q, 0, w_q) to 0: the w image is
  // w_q + r + i|b|^2 + 2i conj(b) z_q + Im(b^2), and r absorbs the real part
  Scalar b = -q[0];
  Scalar im_b2 = (b * b - (b * b).conj()) * Scalar::imag_ratio(-1, 2);
  Scalar w_img_minus_r = q[2] + Scalar::i() * b.norm() +
                         Scalar(2) * Scalar::i() * b.conj() * q[0] + im_b2;
  if (!(w_img_minus_r - w_img_minus_r.conj()).is_zero())
    throw std::logic_error("recenter: translated point not on X");
  Scalar r = -w_img_minus_r;
  current = compose(trans_tau(b, r), current);
  auto final_q = current.rational_value_at({Scalar(0), Scalar(0)});
  for (const auto& c : final_q)
    if (!c.is_zero()) throw std::logic_error("recenter: composition does not vanish at 0");
  RationalMap centered(current.source(), current.target(), current.comps(),
                       {Scalar(0), Scalar(0)}, H.name().empty() ? "" : H.name() + "@p");
  return taylor_germ(centered, order);
}

Series nontransversal_reduce(const MapGerm& germ, int order) {
  MapGerm g = germ.truncated(order);
  VerifyReport rep = mapping_residual(g, order);
  auto t = transversality(g);
  if (t.transversal)
    throw std::domain_error("nontransversal_reduce: germ is transversal at 0");
  if (!rep.passed()) {
    uint32_t wt = rep.residual.low_weight();
    throw std::domain_error(
        "nontransversal_reduce: mapping equation violated at weight " + std::to_string(wt) +
        (g.f.is_zero() ? "" : "; the weighted induction forces f = 0, contradiction"));
  }
  if (!g.f.is_zero() || !g.g.is_zero())
    throw std::domain_error(
        "nontransversal_reduce: residual vanishes but f or g is nonzero; "
        "germ is not a map into X");
  return g.phi;
}

ClassLabel classify(const MapGerm& germ, int order) {
  MapGerm g = germ.truncated(std::min(order, germ.order()));
  VerifyReport rep = mapping_residual(g, g.order());
  if (!rep.passed())
    throw std::domain_error("classify: germ fails the mapping equation at weight " +
                            std::to_string(rep.residual.low_weight()) +
                            "; not a germ of a map into X");
  auto t = transversality(g);
  if (!t.transversal) {
    Series phi = nontransversal_reduce(g, g.order());
    return ClassLabel{ClassKind::Nontransversal, phi};
  }
  NormalFormResult nf = partial_normal_form(g);
  const NormalFormData& d = nf.data;
  auto fail = [](const char* what) {
    throw std::domain_error(std::string("classify: normal form violates ") + what +
                            "; not a germ of a map into X");
  };
  if (!d.mu.is_zero() || !d.nu.is_zero() || !d.sigma.is_zero()) fail("mu = nu = sigma = 0");
  if (!d.lambda.is_zero()) {
    // f^(1,2) = 2 |lambda|^2
    Poly expected = (d.lambda * d.lambda.conj()).scaled_long(2);
    Poly f12 = d.eta + d.xi.scaled(Scalar::i());
    if (!(f12 - expected).is_zero()) fail("f^(1,2) = 2|lambda|^2");
    return ClassLabel{ClassKind::Iota, std::nullopt};
  }
  // lambda = 0: the constraint solution is (eta, xi, gamma) = (alpha^2/2, 0, 0)
  Poly expected_eta = (d.alpha * d.alpha).scaled(Scalar::ratio(1, 2));
  if (!(d.eta - expected_eta).is_zero() || !d.xi.is_zero() || !d.gamma.is_zero())
    fail("(eta, xi, gamma) = (alpha^2/2, 0, 0)");
  if (d.alpha_final > 0) return ClassLabel{ClassKind::R_plus, std::nullopt};
  if (d.alpha_final < 0) return ClassLabel{ClassKind::R_minus, std::nullopt};
  return ClassLabel{ClassKind::Linear_ell, std::nullopt};
}

}  // namespace crlc
