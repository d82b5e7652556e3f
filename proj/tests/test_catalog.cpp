#include <doctest.h>

#include <random>

#include "crlc/parse.hpp"
#include "crlc/replication.hpp"
#include "crlc/verify.hpp"

using namespace crlc;

namespace {

RationalMap cat(const char* n, std::map<std::string, Scalar> p = {}) {
  return std::get<RationalMap>(catalog_map(n, p));
}

}  // namespace

TEST_CASE("r_beta matches the displayed tuple") {
  auto r1 = cat("r_beta", {{"beta", Scalar(1)}});
  auto parsed = std::get<RationalMap>(parse_map(
      "(z*(1+i*w)/(1-w^2), 2*z^2/(1-w^2), w/(1-w^2))", Surface::H3, Surface::X));
  CHECK(rational_maps_equal(r1, parsed));
  // r_0 is the linear map
  CHECK(rational_maps_equal(cat("r_beta", {{"beta", Scalar(0)}}), cat("ell")));
  CHECK(!rational_maps_equal(cat("ell"), r1));
}

TEST_CASE("iota germ starts as (z,w,w)(1 + i z^2 + w^2)") {
  MapGerm iota = iota_germ(5);
  const auto& a = alpha_h3();
  Poly z = Poly::var(a, "z", Scalar(1)), w = Poly::var(a, "w", Scalar(1));
  Series factor(Poly(a, Scalar(1)) + (z * z).scaled(Scalar::i()) + w * w, 5);
  CHECK(iota.f == Series(z, 5) * factor);
  CHECK(iota.phi == Series(w, 5) * factor);
  CHECK(iota.g == iota.phi);
}

TEST_CASE("Ht displayed form and H0 pole") {
  auto ht = cat("Ht", {{"t", Scalar(1)}});
  auto parsed = std::get<RationalMap>(parse_map(
      "(z + 2*z*w^3, -4*i*z^2*w^2, w + w^4)", Surface::H3, Surface::X));
  CHECK(rational_maps_equal(ht, parsed));
  auto h0 = cat("H0");
  CHECK_THROWS(h0.rational_value_at({Scalar(0), Scalar(0)}));
  auto v = h0.rational_value_at({Scalar(0), Scalar(1)});
  CHECK(v[0].is_zero());
  CHECK(v[1].is_zero());
  CHECK(v[2] == Scalar(1));
}

TEST_CASE("taylor germs match the displayed jets") {
  // r_1: f = z + i z w + O(4)-consistent, phi = 2 z^2 (1 + w^2) + O(5)
  MapGerm g = taylor_germ(cat("r_beta", {{"beta", Scalar(1)}}), 5);
  CHECK(g.jet(0, 1, 0) == Scalar(1));
  CHECK(g.jet(0, 1, 1) == Scalar::i());
  CHECK(g.jet(1, 2, 0) == Scalar(2));
  CHECK(g.jet(1, 2, 1) == Scalar(0));
  const auto& a = alpha_h3();
  Poly z = Poly::var(a, "z", Scalar(1)), w = Poly::var(a, "w", Scalar(1));
  CHECK(g.phi == Series((z * z).scaled_long(2) * (Poly(a, Scalar(1)) + w * w), 5));
  // ell
  MapGerm l = taylor_germ(cat("ell"), 8);
  CHECK(l.f == Series(z, 8));
  CHECK(l.phi.is_zero());
  CHECK(l.g == Series(w, 8));
}

TEST_CASE("iota second-Segre construction agrees at every order up to 20") {
  MapGerm big = iota_second_segre(20);
  for (int n = 4; n <= 20; n += 4) {
    MapGerm direct = iota_germ(n);
    CHECK(big.f.truncated(n) == direct.f);
    CHECK(big.phi.truncated(n) == direct.phi);
    CHECK(big.g.truncated(n) == direct.g);
  }
}

TEST_CASE("composition is associative on catalog automorphisms") {
  std::vector<RationalMap> auts = {cat("ex52_phi2p"), cat("ex52_phi1p"), cat("ex52_phip")};
  for (size_t i = 0; i < auts.size(); ++i) {
    auto a = auts[i % 3], b = auts[(i + 1) % 3], c = auts[(i + 2) % 3];
    CHECK(rational_maps_equal(compose(compose(a, b), c), compose(a, compose(b, c))));
  }
  CHECK(rational_maps_equal(compose(RationalMap::identity(Surface::X), auts[0]), auts[0]));
  CHECK(rational_maps_equal(compose(auts[0], RationalMap::identity(Surface::X)), auts[0]));
}

TEST_CASE("print then parse is the identity on rational catalog maps") {
  for (const auto& name : catalog_names()) {
    std::map<std::string, Scalar> params;
    if (name == "r_beta") params.emplace("beta", Scalar::ratio(-1, 4));
    if (name == "Ht") params.emplace("t", Scalar(2));
    auto v = catalog_map(name, params);
    if (!std::holds_alternative<RationalMap>(v)) continue;
    const auto& m = std::get<RationalMap>(v);
    bool has_sqrt2 = false;
    for (const auto& c : m.comps())
      for (const auto& [mono, coeff] : c.num.terms()) has_sqrt2 = has_sqrt2 || mono.r2;
    for (const auto& c : m.comps())
      for (const auto& [mono, coeff] : c.den.terms()) has_sqrt2 = has_sqrt2 || mono.r2;
    if (has_sqrt2) continue;  // sqrt2 is not part of the input grammar
    auto round = parse_map(print_map(m), m.source(), m.target(), 20, m.center());
    CHECK(rational_maps_equal(std::get<RationalMap>(round), m));
  }
}

TEST_CASE("catalog germs honor the requested order consistently") {
  MapGerm i20 = iota_germ(20);
  MapGerm i12 = iota_germ(12);
  CHECK(i20.f.truncated(12) == i12.f);
  SphereGerm s16 = I_germ(16);
  SphereGerm s10 = I_germ(10);
  for (int k = 0; k < 3; ++k) CHECK(s16.comps[k].truncated(10) == s10.comps[k]);
}

TEST_CASE("nontransversal germ factory") {
  const auto& a = alpha_h3();
  Poly z = Poly::var(a, "z", Scalar(1));
  MapGerm t = nontransversal_germ(z, 10);
  CHECK(t.f.is_zero());
  CHECK(t.g.is_zero());
  CHECK(t.phi == Series(z, 10));
  CHECK_THROWS(nontransversal_germ(Poly(a, Scalar(1)), 10));
}
