#include "crlc/automorphisms.hpp"

#include <stdexcept>

#include "crlc/catalog.hpp"

namespace crlc {

namespace {

Poly pv(const AlphabetPtr& a, const char* v) { return Poly::var(a, v, Scalar(1)); }

const RationalMap& phi_map() {
  static const RationalMap m = std::get<RationalMap>(catalog_map("Phi"));
  return m;
}

const RationalMap& phiinv_map() {
  static const RationalMap m = std::get<RationalMap>(catalog_map("PhiInv"));
  return m;
}

}  // namespace

void StabParamsX::validate() const {
  if (!t.is_real()) throw std::invalid_argument("stab_X: t must be real");
  if (!(u * u.conj()).is_one()) throw std::invalid_argument("stab_X: u must be unit modulus");
  if (!lambda.is_real() || lambda.re() <= 0)
    throw std::invalid_argument("stab_X: lambda must be a positive rational");
}

Scalar unit_from_circle(const Scalar& s) {
  if (!s.is_real()) throw std::invalid_argument("unit_from_circle: parameter must be real");
  Scalar one(1);
  Scalar is = Scalar::i() * s;
  return (one - is) / (one + is);
}

RationalMap stab_X(const StabParamsX& p) {
  p.validate();
  const auto& alpha = surface(Surface::X).alpha;
  Poly z = pv(alpha, "z"), zeta = pv(alpha, "zeta"), w = pv(alpha, "w");
  Poly one(alpha, Scalar(1));
  Scalar i = Scalar::i();
  Scalar ab = p.a.conj();
  Poly v = w * zeta + (z * z).scaled(i);  // w zeta + i z^2
  Poly delta = one - z.scaled(Scalar(2) * i * ab) - w.scaled(p.t + i * p.a.norm()) +
               v.scaled(i * ab * ab);
  Poly znum = (z + w.scaled(p.a) - v.scaled(ab)).scaled(p.lambda * p.u);
  Poly wnum = w.scaled(p.lambda * p.lambda);
  Poly zetanum =
      (zeta - z.scaled(Scalar(2) * i * p.a) - w.scaled(i * p.a * p.a) - v.scaled(p.t - i * p.a.norm()))
          .scaled(p.u * p.u);
  return RationalMap(Surface::X, Surface::X,
                     {{znum, delta}, {zetanum, delta}, {wnum, delta}}, {}, "stabX");
}

StabParamsX stab_X_inverse(const StabParamsX& p) {
  p.validate();
  StabParamsX q;
  q.lambda = Scalar(1) / p.lambda;
  q.u = p.u.conj();
  q.a = -(p.a * p.u) / p.lambda;
  q.t = -p.t / (p.lambda * p.lambda);
  return q;
}

RationalMap trans_tau(const Scalar& b, const Scalar& r) {
  if (!r.is_real()) throw std::invalid_argument("trans_tau: r must be real");
  const auto& alpha = surface(Surface::X).alpha;
  Poly z = pv(alpha, "z"), zeta = pv(alpha, "zeta"), w = pv(alpha, "w");
  Poly one(alpha, Scalar(1));
  Scalar i = Scalar::i();
  Scalar bb = b.conj();
  Scalar half = Scalar::ratio(1, 2);
  Poly znum = z + one.scaled(b) - zeta.scaled(bb);
  Poly wnum = w + one.scaled(r + i * b.norm() + i * bb * bb * half - i * b * b * half) +
              z.scaled(Scalar(2) * i * bb) - zeta.scaled(i * bb * bb);
  return RationalMap(Surface::X, Surface::X,
                     {{znum, one}, {zeta, one}, {wnum, one}}, {}, "tau");
}

std::optional<Poly> sqrt_in_ring(const mpq_class& value, const AlphabetPtr& alpha) {
  if (value < 0) return std::nullopt;
  if (auto r = sqrt_exact(value)) return Poly(alpha, Scalar(*r));
  mpq_class half = value / 2;
  if (auto r = sqrt_exact(half)) return Poly::sqrt2(alpha, Scalar(*r));
  return std::nullopt;
}

RationalMap trans_dilation_lambda(const Scalar& lp) {
  if (!lp.is_real() || lp.re() <= 0)
    throw std::invalid_argument("dilation: parameter must be a positive rational");
  const auto& alpha = surface(Surface::X).alpha;
  auto root = sqrt_in_ring(lp.re(), alpha);
  if (!root)
    throw std::invalid_argument(
        "dilation: sqrt(lambda') not representable in Q(sqrt2); pick lambda' = s^2 or 2 s^2");
  Poly z = pv(alpha, "z"), zeta = pv(alpha, "zeta"), w = pv(alpha, "w");
  Poly one(alpha, Scalar(1));
  Scalar l = lp;
  Poly eps = one.scaled(Scalar(1) + l) + zeta.scaled(l - Scalar(1));
  Poly v = w * zeta + (z * z).scaled(Scalar::i());
  Poly znum = (*root * z).scaled_long(2);
  Poly zetanum = eps + (zeta - one).scaled_long(2);
  Poly wnum = w.scaled(l + Scalar(1)) + v.scaled(l - Scalar(1));
  return RationalMap(Surface::X, Surface::X,
                     {{znum, eps}, {zetanum, eps}, {wnum, eps}}, {}, "dilL");
}

RationalMap trans_dilation_mu(const Scalar& mp) {
  if (!mp.is_real() || mp.re() <= 0)
    throw std::invalid_argument("dilation: parameter must be a positive rational");
  const auto& alpha = surface(Surface::X).alpha;
  auto root = sqrt_in_ring(mp.re(), alpha);
  if (!root)
    throw std::invalid_argument(
        "dilation: sqrt(mu') not representable in Q(sqrt2); pick mu' = s^2 or 2 s^2");
  Poly z = pv(alpha, "z"), zeta = pv(alpha, "zeta"), w = pv(alpha, "w");
  Poly one(alpha, Scalar(1));
  Scalar i = Scalar::i();
  Scalar m = mp;
  Poly eps = one.scaled(Scalar(1) + m) + zeta.scaled(-i * (m - Scalar(1)));
  Poly v = w * zeta + (z * z).scaled(i);
  Poly znum = (*root * z).scaled_long(2);
  Poly zetanum = one.scaled(i * (m - Scalar(1))) + zeta.scaled(m + Scalar(1));
  Poly wnum = w.scaled(m + Scalar(1)) + v.scaled(-i * (m - Scalar(1)));
  return RationalMap(Surface::X, Surface::X,
                     {{znum, eps}, {zetanum, eps}, {wnum, eps}}, {}, "dilM");
}

RationalMap stab_H3(const Scalar& c, const Scalar& r, const Scalar& u, const Scalar& lambda) {
  if (!r.is_real()) throw std::invalid_argument("stab_H3: r must be real");
  if (!(u * u.conj()).is_one()) throw std::invalid_argument("stab_H3: u must be unit modulus");
  if (!lambda.is_real() || lambda.re() <= 0)
    throw std::invalid_argument("stab_H3: lambda must be a positive rational");
  const auto& alpha = surface(Surface::H3).alpha;
  Poly z = pv(alpha, "z"), w = pv(alpha, "w");
  Poly one(alpha, Scalar(1));
  Scalar i = Scalar::i();
  Poly den = one - z.scaled(Scalar(2) * i * c.conj()) + w.scaled(r - i * c.norm());
  Poly znum = (z + w.scaled(c)).scaled(lambda * u);
  Poly wnum = w.scaled(lambda * lambda);
  return RationalMap(Surface::H3, Surface::H3, {{znum, den}, {wnum, den}}, {}, "stabH3");
}

RationalMap heis_translation(const Scalar& z0, const Scalar& w0) {
  Scalar rho = (w0 - w0.conj()) * Scalar::imag_ratio(-1, 2) - z0.norm();
  if (!rho.is_zero()) throw std::invalid_argument("heis_translation: point must lie on H3");
  const auto& alpha = surface(Surface::H3).alpha;
  Poly z = pv(alpha, "z"), w = pv(alpha, "w");
  Poly one(alpha, Scalar(1));
  Poly znum = z + one.scaled(z0);
  Poly wnum = w + one.scaled(w0) + z.scaled(Scalar::imag_ratio(2, 1) * z0.conj());
  return RationalMap(Surface::H3, Surface::H3, {{znum, one}, {wnum, one}}, {}, "heisT");
}

AutD4 aut_D4(const StabParamsX& p) {
  p.validate();
  RationalMap composed = compose(phi_map(), compose(stab_X(p), phiinv_map()));
  const auto& alpha = surface(Surface::D4).alpha;

  Scalar i = Scalar::i();
  Scalar two(2);
  Scalar norm_a(p.a.norm());
  Scalar l2 = p.lambda * p.lambda;
  Scalar kappa = Scalar(1) + two * norm_a + l2 + two * i * p.t;
  std::vector<Scalar> W = {
      (Scalar(-2) * i * p.a) / kappa,
      (l2 - Scalar(1) + two * norm_a - two * p.a * p.a + two * i * p.t) / (two * kappa),
      i * (l2 - Scalar(1) + two * norm_a + two * p.a * p.a + two * i * p.t) / (two * kappa)};

  Poly zz(alpha), herm(alpha);
  Scalar wtw(0);
  for (int k = 0; k < 3; ++k) {
    Poly zk = pv(alpha, surface(Surface::D4).holo_vars()[k].c_str());
    zz += zk * zk;
    herm += zk.scaled(W[k].conj());
    wtw += W[k] * W[k];
  }
  Scalar pre = Scalar(1) + two * norm_a + l2 - two * i * p.t;
  Poly delta = (Poly(alpha, Scalar(1)) - herm.scaled_long(2) + zz.scaled(wtw.conj())).scaled(pre);

  // The factorization claim is checked by reducing the composition: each
  // cleared denominator splits off delta exactly, and the cofactor divides
  // the numerator. The returned map carries delta as its denominator.
  std::vector<MapComponent> reduced;
  for (const auto& c : composed.comps()) {
    auto cof = exact_divide(c.den, delta);
    if (!cof)
      throw std::logic_error("aut_D4: composed denominator is not a multiple of delta");
    auto num = exact_divide(c.num, *cof);
    if (!num)
      throw std::logic_error("aut_D4: denominator cofactor does not divide the numerator");
    reduced.push_back({*num, delta});
  }
  RationalMap slim(Surface::D4, Surface::D4, std::move(reduced), composed.center(), "autD4");
  return AutD4{std::move(slim), std::move(W), std::move(delta), pre};
}

}  // namespace crlc
