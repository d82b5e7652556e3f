#include "crlc/rational_map.hpp"

#include <stdexcept>

namespace crlc {

RationalMap::RationalMap(Surface source, Surface target, std::vector<MapComponent> comps,
                         std::vector<Scalar> center, std::string name)
    : source_(source), target_(target), comps_(std::move(comps)),
      center_(std::move(center)), name_(std::move(name)) {
  const auto& src = surface(source_);
  const auto& tgt = surface(target_);
  if (static_cast<int>(comps_.size()) != tgt.ambient_dim)
    throw std::invalid_argument("RationalMap: component count does not match target dimension");
  if (center_.empty()) center_.assign(src.ambient_dim, Scalar(0));
  if (static_cast<int>(center_.size()) != src.ambient_dim)
    throw std::invalid_argument("RationalMap: center dimension mismatch");
  for (const auto& c : comps_) {
    if (c.num.alphabet() != src.alpha || c.den.alphabet() != src.alpha)
      throw std::invalid_argument("RationalMap: components must live in the source alphabet");
    Poly d0 = eval_point(c.den, src.alpha, center_);
    if (d0.is_zero())
      throw std::invalid_argument("RationalMap: denominator vanishes at the center");
  }
}

RationalMap RationalMap::negated() const {
  std::vector<MapComponent> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back({-c.num, c.den});
  RationalMap r(source_, target_, std::move(out), center_,
                name_.empty() ? "" : "-" + name_);
  return r;
}

std::vector<Poly> RationalMap::value_at(const std::vector<Scalar>& point) const {
  const auto& src = surface(source_);
  std::vector<Poly> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) {
    Poly num = eval_point(c.num, src.alpha, point);
    Poly den = eval_point(c.den, src.alpha, point);
    if (den.is_zero()) throw std::domain_error("RationalMap: pole at the evaluation point");
    out.push_back(constant_inverse(den) * num);
  }
  return out;
}

std::vector<Scalar> RationalMap::rational_value_at(const std::vector<Scalar>& point) const {
  std::vector<Scalar> out;
  for (const auto& v : value_at(point)) {
    if (!v.sqrt2_term(Scalar(0)).is_zero())
      throw std::domain_error("RationalMap: value leaves Q(i) at the point");
    out.push_back(v.constant_term(Scalar(0)));
  }
  return out;
}

RationalMap RationalMap::identity(Surface s) {
  const auto& surf = surface(s);
  std::vector<MapComponent> comps;
  Poly one(surf.alpha, Scalar(1));
  for (const auto& v : surf.holo_vars())
    comps.push_back({Poly::var(surf.alpha, v, Scalar(1)), one});
  return RationalMap(s, s, std::move(comps), {}, "id");
}

RationalMap compose(const RationalMap& F, const RationalMap& G) {
  const auto& mid_f = surface(F.source());
  const auto& mid_g = surface(G.target());
  if (mid_f.ambient_dim != mid_g.ambient_dim)
    throw std::invalid_argument("compose: ambient dimensions do not match");

  std::map<std::string, RationalBinding<Scalar>> bindings;
  for (size_t k = 0; k < G.comps().size(); ++k)
    bindings.emplace(mid_f.holo_vars()[k],
                     RationalBinding<Scalar>{G.comps()[k].num, G.comps()[k].den});

  std::vector<MapComponent> out;
  out.reserve(F.comps().size());
  for (const auto& c : F.comps()) {
    auto [vals, cleared] = substitute_rational_multi<Scalar>({c.num, c.den}, bindings);
    (void)cleared;
    out.push_back({vals[0], vals[1]});
  }
  std::string name;
  if (!F.name().empty() && !G.name().empty()) name = F.name() + "." + G.name();
  return RationalMap(G.source(), F.target(), std::move(out), G.center(), std::move(name));
}

bool rational_maps_equal(const RationalMap& F, const RationalMap& G) {
  if (F.source() != G.source() || F.target() != G.target()) return false;
  for (size_t k = 0; k < F.comps().size(); ++k) {
    const auto& a = F.comps()[k];
    const auto& b = G.comps()[k];
    if (!(a.num * b.den - b.num * a.den).is_zero()) return false;
  }
  return true;
}

Scalar MapGerm::jet(int comp_idx, int a, int b) const {
  const Series& s = comp(comp_idx);
  const auto& alpha = *s.alphabet();
  Mono m;
  m.e[alpha.index_of("z")] = static_cast<uint16_t>(a);
  m.e[alpha.index_of("w")] = static_cast<uint16_t>(b);
  m.wdeg = static_cast<uint32_t>(a + 2 * b);
  Scalar c = s.body().coeff(m, Scalar(0));
  Mono m2 = m;
  m2.r2 = 1;
  if (!s.body().coeff(m2, Scalar(0)).is_zero())
    throw std::domain_error("MapGerm::jet: coefficient leaves Q(i)");
  return c;
}

void check_germ_shape(const MapGerm& germ) {
  for (int k = 0; k < 3; ++k)
    if (!germ.comp(k).body().truncated(1).is_zero())
      throw std::invalid_argument("germ does not vanish at 0");
  int zvar = germ.alphabet()->index_of("z");
  int wvar = germ.alphabet()->index_of("w");
  for (const auto& [m, c] : germ.g.body().terms())
    if (m.e[wvar] == 0 && m.e[zvar] > 0)
      throw std::invalid_argument("germ violates g(z,0) = 0");
}

Series component_series(const MapComponent& comp, const AlphabetPtr& alpha, int order) {
  Series num(comp.num, order);
  Series den(comp.den, order);
  return num * series_inverse(den);
}

MapGerm taylor_germ(const RationalMap& map, int order) {
  if (map.source() != Surface::H3 || map.target() != Surface::X)
    throw std::invalid_argument("taylor_germ: expects an H3 -> X map");
  for (const auto& c : map.center())
    if (!c.is_zero())
      throw std::invalid_argument("taylor_germ: center must be the origin; recenter first");
  const auto& alpha = surface(Surface::H3).alpha;
  MapGerm germ{component_series(map.comps()[0], alpha, order),
               component_series(map.comps()[1], alpha, order),
               component_series(map.comps()[2], alpha, order)};
  check_germ_shape(germ);
  return germ;
}

namespace {

std::map<std::string, Series> germ_bindings(const MapGerm& germ, Surface mid) {
  const auto& vars = surface(mid).holo_vars();
  std::map<std::string, Series> b;
  b.emplace(vars[0], germ.f);
  b.emplace(vars[1], germ.phi);
  b.emplace(vars[2], germ.g);
  return b;
}

}  // namespace

MapGerm postcompose_germ(const RationalMap& psi, const MapGerm& germ) {
  if (psi.source() != Surface::X || psi.target() != Surface::X)
    throw std::invalid_argument("postcompose_germ: expects an X automorphism");
  auto bindings = germ_bindings(germ, Surface::X);
  std::array<Series, 3> out{germ.f, germ.phi, germ.g};
  for (int k = 0; k < 3; ++k) {
    Series num = substitute_series(psi.comps()[k].num, bindings);
    Series den = substitute_series(psi.comps()[k].den, bindings);
    out[k] = num * series_inverse(den);
  }
  return MapGerm{out[0], out[1], out[2]};
}

MapGerm precompose_germ(const MapGerm& germ, const RationalMap& gamma) {
  if (gamma.source() != Surface::H3 || gamma.target() != Surface::H3)
    throw std::invalid_argument("precompose_germ: expects an H3 automorphism");
  int order = germ.order();
  const auto& alpha = germ.alphabet();
  Series gz = component_series(gamma.comps()[0], alpha, order);
  Series gw = component_series(gamma.comps()[1], alpha, order);
  std::map<std::string, Series> bindings{{"z", gz}, {"w", gw}};
  return MapGerm{substitute_series(germ.f, bindings), substitute_series(germ.phi, bindings),
                 substitute_series(germ.g, bindings)};
}

}  // namespace crlc
