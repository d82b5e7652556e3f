#include "crlc/catalog.hpp"

#include <functional>
#include <stdexcept>

namespace crlc {

namespace {

struct Ctx {
  AlphabetPtr a;
  Poly z, w, zeta, one, i, r2;

  explicit Ctx(Surface s) {
    a = surface(s).alpha;
    const auto& hv = surface(s).holo_vars();
    z = Poly::var(a, hv[0], Scalar(1));
    w = Poly::var(a, hv.size() == 3 ? hv[2] : hv[1], Scalar(1));
    if (hv.size() == 3) zeta = Poly::var(a, hv[1], Scalar(1));
    one = Poly(a, Scalar(1));
    i = Poly(a, Scalar::i());
    r2 = Poly::sqrt2(a, Scalar(1));
  }
  Poly c(long p, long q = 1) const { return Poly(a, Scalar::ratio(p, q)); }
  Poly cs(const Scalar& s) const { return Poly(a, s); }
};

Scalar get_param(const std::map<std::string, Scalar>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("catalog: missing parameter '" + key + "'");
  return it->second;
}

RationalMap make_ell() {
  Ctx c(Surface::H3);
  return RationalMap(Surface::H3, Surface::X,
                     {{c.z, c.one}, {Poly(c.a), c.one}, {c.w, c.one}}, {}, "ell");
}

RationalMap make_r_beta(const Scalar& beta) {
  if (!beta.is_real()) throw std::invalid_argument("r_beta: beta must be real rational");
  Ctx c(Surface::H3);
  Poly b = c.cs(beta);
  Poly den = c.one - b * b * c.w * c.w;
  return RationalMap(Surface::H3, Surface::X,
                     {{c.z * (c.one + c.i * b * c.w), den},
                      {b.scaled_long(2) * c.z * c.z, den},
                      {c.w, den}},
                     {}, "r_beta");
}

RationalMap make_Ht(const Scalar& t) {
  if (!t.is_real()) throw std::invalid_argument("Ht: t must be real rational");
  Ctx c(Surface::H3);
  Poly tp = c.cs(t);
  return RationalMap(Surface::H3, Surface::X,
                     {{c.z + tp.scaled_long(2) * c.z * c.w.pow(3), c.one},
                      {(tp * c.z * c.z * c.w * c.w).scaled(Scalar::imag_ratio(-4, 1)), c.one},
                      {c.w + tp * c.w.pow(4), c.one}},
                     {}, "Ht");
}

RationalMap make_H0() {
  Ctx c(Surface::H3);
  return RationalMap(Surface::H3, Surface::X,
                     {{c.z, c.one}, {c.z * c.z.scaled(Scalar::imag_ratio(-1, 1)), c.w}, {c.w, c.one}},
                     {Scalar(0), Scalar(1)}, "H0");
}

RationalMap make_Phi() {
  Ctx c(Surface::X);
  Poly i2 = c.cs(Scalar::imag_ratio(2, 1));
  Poly den = i2 + c.w;                          // 2i + w
  Poly v = c.w * c.zeta + c.i * c.z * c.z;      // w zeta + i z^2
  return RationalMap(
      Surface::X, Surface::D4,
      {{c.z.scaled(Scalar::imag_ratio(2, 1)), den},
       {i2 - c.w - c.zeta.scaled(Scalar::imag_ratio(2, 1)) - v, den.scaled_long(2)},
       {(i2 - c.w + c.zeta.scaled(Scalar::imag_ratio(2, 1)) + v) * c.i, den.scaled_long(2)}},
      {}, "Phi");
}

RationalMap make_PhiInv() {
  Ctx c(Surface::D4);
  Poly z1 = Poly::var(c.a, "z1", Scalar(1));
  Poly z2 = Poly::var(c.a, "z2", Scalar(1));
  Poly z3 = Poly::var(c.a, "z3", Scalar(1));
  Poly den = c.one + z2 - c.i * z3;
  Poly sq = z1 * z1 + z2 * z2 + z3 * z3;
  return RationalMap(Surface::D4, Surface::X,
                     {{z1.scaled_long(2), den},
                      {-(z2 + c.i * z3 + sq), den},
                      {(c.one - z2 + c.i * z3).scaled(Scalar::imag_ratio(2, 1)), den}},
                     {Scalar(0), Scalar::ratio(1, 2), Scalar::imag_ratio(1, 2)}, "PhiInv");
}

RationalMap make_Cayley() {
  Ctx c(Surface::S3);
  Poly den = c.one + c.w;
  return RationalMap(Surface::S3, Surface::H3,
                     {{c.z, den}, {(c.one - c.w) * c.i, den}}, {}, "Cayley");
}

RationalMap make_gamma(int variant) {
  Ctx c(Surface::S3);
  if (variant == 0) {
    Poly den = c.w - c.c(3);
    return RationalMap(Surface::S3, Surface::S3,
                       {{c.r2 * c.z.scaled_long(-2), den}, {c.one - c.c(3) * c.w, den}},
                       {}, "gamma0");
  }
  Poly den = c.w + c.c(3);
  return RationalMap(Surface::S3, Surface::S3,
                     {{c.r2 * c.z.scaled_long(-2), den}, {-(c.c(3) * c.w + c.one), den}},
                     {}, "gamma1");
}

RationalMap make_R0() {
  Ctx c(Surface::S3);
  Poly den = (c.w + c.one).scaled_long(4);
  Poly w2 = c.w * c.w;
  return RationalMap(Surface::S3, Surface::D4,
                     {{c.r2 * c.z, c.c(2)},
                      {w2.scaled_long(2) + c.w.scaled_long(2) - c.z * c.z, den},
                      {(w2.scaled_long(2) + c.w.scaled_long(2) + c.z * c.z) * c.i, den}},
                     {}, "R0");
}

RationalMap make_P1() {
  Ctx c(Surface::S3);
  return RationalMap(Surface::S3, Surface::D4,
                     {{c.z * c.w, c.one},
                      {(c.z * c.z - c.w * c.w), c.c(2)},
                      {(c.z * c.z + c.w * c.w) * c.i, c.c(2)}},
                     {}, "P1");
}

RationalMap make_Pm1() {
  Ctx c(Surface::S3);
  return RationalMap(Surface::S3, Surface::D4,
                     {{c.z, c.one}, {c.w * c.w, c.c(2)}, {c.w * c.w * c.i, c.c(2)}},
                     {}, "Pm1");
}

RationalMap make_XY_R() {
  Ctx c(Surface::S3);
  Poly den = c.r2 * (c.one - c.w);
  Poly z2h = c.z * c.z;
  return RationalMap(Surface::S3, Surface::D4,
                     {{c.z, c.one},
                      {z2h.scaled(Scalar::ratio(1, 2)) - c.w * c.w + c.w, den},
                      {(z2h.scaled(Scalar::ratio(1, 2)) + c.w * c.w - c.w) * c.i, den}},
                     {Scalar(0), Scalar::ratio(1, 2)}, "XY_R");
}

RationalMap make_Psi1() {
  Ctx c(Surface::D4);
  Poly z1 = Poly::var(c.a, "z1", Scalar(1));
  Poly z2 = Poly::var(c.a, "z2", Scalar(1));
  Poly z3 = Poly::var(c.a, "z3", Scalar(1));
  Poly den = c.r2 - z2 + c.i * z3;
  Poly sq = z1 * z1 + z2 * z2 + z3 * z3;
  return RationalMap(
      Surface::D4, Surface::X,
      {{z1.scaled_long(-2), den},
       {z2.scaled_long(2) + z3.scaled(Scalar::imag_ratio(2, 1)) - c.r2 * sq, den.scaled_long(2)},
       {(c.r2 * c.i + c.i * z2 + z3).scaled_long(2), den}},
      {}, "Psi1");
}

RationalMap make_Psi2() {
  Ctx c(Surface::H3);
  Poly den = c.i + c.w;
  return RationalMap(Surface::H3, Surface::S3,
                     {{c.i - c.w, den}, {c.z.scaled(Scalar::imag_ratio(2, 1)), den}},
                     {}, "Psi2");
}

RationalMap make_ex52_phi() {
  Ctx c(Surface::H3);
  return RationalMap(Surface::H3, Surface::H3, {{c.z, c.one}, {c.w + c.one, c.one}},
                     {}, "ex52_phi");
}

RationalMap make_ex52_phi1p() {
  Ctx c(Surface::X);
  Poly den = c.c(3) - c.zeta;
  return RationalMap(Surface::X, Surface::X,
                     {{c.r2 * c.z.scaled_long(2), den},
                      {c.c(3) * c.zeta - c.one, den},
                      {c.w * den - c.i * c.z * c.z, den}},
                     {}, "ex52_phi1p");
}

RationalMap make_ex52_phi2p() {
  Ctx c(Surface::X);
  return RationalMap(Surface::X, Surface::X,
                     {{c.z + c.i * (c.one + c.zeta), c.one},
                      {c.zeta, c.one},
                      {c.z.scaled_long(2) + c.w + c.i * (c.one + c.zeta), c.one}},
                     {}, "ex52_phi2p");
}

RationalMap make_ex52_phihat() {
  Ctx c(Surface::H3);
  Poly den = (c.i + c.z).scaled(Scalar(mpq_class(2), mpq_class(2))) + c.w;
  return RationalMap(Surface::H3, Surface::H3,
                     {{c.z.scaled_long(2) + c.w, den},
                      {c.w.scaled(Scalar(mpq_class(-1), mpq_class(1))), den}},
                     {}, "ex52_phihat");
}

RationalMap make_ex52_phip() {
  Ctx c(Surface::X);
  Poly zm2i = c.z - c.cs(Scalar::imag_ratio(2, 1));
  Poly den = c.i * zm2i * zm2i + (c.zeta - c.one) * c.w;
  Poly m2i = c.cs(Scalar::imag_ratio(-2, 1));
  return RationalMap(
      Surface::X, Surface::X,
      {{m2i * den + c.c(8) + c.z.scaled(Scalar::imag_ratio(4, 1)), den},
       {(c.c(4) + c.i * c.z) * c.z - c.zeta.scaled(Scalar::imag_ratio(4, 1)) + (c.zeta - c.one) * c.w,
        den},
       {c.w.scaled(Scalar::imag_ratio(-4, 1)), den}},
      {}, "ex52_phip");
}

}  // namespace

MapGerm iota_germ(int order) {
  Ctx c(Surface::H3);
  Series z(c.z, order), w(c.w, order);
  Series s = Series(c.one, order) - (w * w).scaled_long(4) -
             (z * z).scaled(Scalar::imag_ratio(4, 1));
  Series root = series_sqrt(s);
  Series inv = series_inverse(Series(c.one, order) + root);
  return MapGerm{z.scaled_long(2) * inv, w.scaled_long(2) * inv, w.scaled_long(2) * inv};
}

SphereGerm I_germ(int order) {
  Ctx c(Surface::S3);
  Series z(c.z, order), w(c.w, order);
  Series s = Series(c.one, order) - z * z - w * w;
  Series root = series_sqrt(s);
  // 1/sqrt2 = sqrt2/2
  Scalar half = Scalar::ratio(1, 2);
  Series r2half(c.r2.scaled(half), order);
  SphereGerm g;
  g.comps = {z * r2half, w * r2half, (Series(c.one, order) - root) * r2half};
  return g;
}

MapGerm nontransversal_germ(const Poly& phi, int order) {
  if (phi.alphabet() != alpha_h3())
    throw std::invalid_argument("nontransversal_germ: phi must use the H3 germ variables");
  if (!phi.truncated(1).is_zero())
    throw std::invalid_argument("nontransversal_germ: phi(0) must vanish");
  Series zero(Poly(alpha_h3()), order);
  return MapGerm{zero, Series(phi, order), zero};
}

CatalogValue catalog_map(const std::string& name, const std::map<std::string, Scalar>& params,
                         int order) {
  if (name == "ell") return make_ell();
  if (name == "r_beta") return make_r_beta(get_param(params, "beta"));
  if (name == "iota") return iota_germ(order);
  if (name == "t_phi") {
    Poly phi = Poly::var(alpha_h3(), "z", Scalar(1));
    return nontransversal_germ(phi, order);
  }
  if (name == "Phi") return make_Phi();
  if (name == "PhiInv") return make_PhiInv();
  if (name == "Cayley") return make_Cayley();
  if (name == "gamma0") return make_gamma(0);
  if (name == "gamma1") return make_gamma(1);
  if (name == "R0") return make_R0();
  if (name == "P1") return make_P1();
  if (name == "Pm1") return make_Pm1();
  if (name == "I") return I_germ(order);
  if (name == "Ht") return make_Ht(get_param(params, "t"));
  if (name == "H0") return make_H0();
  if (name == "XY_R") return make_XY_R();
  if (name == "Psi1") return make_Psi1();
  if (name == "Psi2") return make_Psi2();
  if (name == "ex52_phi") return make_ex52_phi();
  if (name == "ex52_phi1p") return make_ex52_phi1p();
  if (name == "ex52_phi2p") return make_ex52_phi2p();
  if (name == "ex52_phihat") return make_ex52_phihat();
  if (name == "ex52_phip") return make_ex52_phip();
  throw std::invalid_argument("catalog: unknown map '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"ell",    "r_beta", "iota",       "t_phi",      "Phi",        "PhiInv",
          "Cayley", "gamma0", "gamma1",     "R0",         "P1",         "Pm1",
          "I",      "Ht",     "H0",         "XY_R",       "Psi1",       "Psi2",
          "ex52_phi", "ex52_phi1p", "ex52_phi2p", "ex52_phihat", "ex52_phip"};
}

}  // namespace crlc
