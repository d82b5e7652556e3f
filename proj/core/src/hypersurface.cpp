#include "crlc/hypersurface.hpp"

#include <stdexcept>

namespace crlc {

namespace {

Poly pvar(const AlphabetPtr& a, const std::string& v) { return Poly::var(a, v, Scalar(1)); }
Poly pconst(const AlphabetPtr& a, Scalar c) { return Poly(a, std::move(c)); }

Hypersurface make_h3() {
  Hypersurface s;
  s.tag = Surface::H3;
  s.alpha = alpha_h3();
  auto z = pvar(s.alpha, "z"), w = pvar(s.alpha, "w");
  auto zb = pvar(s.alpha, "zb"), wb = pvar(s.alpha, "wb");
  Scalar mi2 = Scalar::imag_ratio(-1, 2);  // -i/2
  // Im w - |z|^2
  s.defining_num = w.scaled(mi2) + wb.scaled(-mi2) - z * zb;
  s.defining_den = pconst(s.alpha, Scalar(1));
  s.normalized_num = s.defining_num;
  s.normalized_den = s.defining_den;
  s.solved_var = s.alpha->index_of("w");
  s.rule_num = wb + (z * zb).scaled(Scalar::imag_ratio(2, 1));
  s.rule_den = pconst(s.alpha, Scalar(1));
  s.ambient_dim = 2;
  s.holo_vars_ = {"z", "w"};
  return s;
}

Hypersurface make_x() {
  Hypersurface s;
  s.tag = Surface::X;
  s.alpha = alpha_x();
  auto z = pvar(s.alpha, "z"), zeta = pvar(s.alpha, "zeta"), w = pvar(s.alpha, "w");
  auto zb = pvar(s.alpha, "zb"), zetab = pvar(s.alpha, "zetab"), wb = pvar(s.alpha, "wb");
  Scalar mi2 = Scalar::imag_ratio(-1, 2);
  Poly one = pconst(s.alpha, Scalar(1));
  Poly imw = w.scaled(mi2) + wb.scaled(-mi2);
  // Im w (1 - |zeta|^2) - |z|^2 - Re(z^2 zetab)
  s.defining_num = imw * (one - zeta * zetab) - z * zb -
                   (z * z * zetab + zb * zb * zeta).scaled(Scalar::ratio(1, 2));
  s.defining_den = one;
  s.normalized_num = s.defining_num;
  Scalar i2 = Scalar::imag_ratio(2, 1);
  s.normalized_den = (w + pconst(s.alpha, i2)) * (wb - pconst(s.alpha, i2));
  s.solved_var = s.alpha->index_of("w");
  // w = wb + (2i z zb + i z^2 zetab + i zb^2 zeta) / (1 - zeta zetab)
  s.rule_den = one - zeta * zetab;
  s.rule_num = wb * s.rule_den + (z * zb).scaled(i2) +
               (z * z * zetab + zb * zb * zeta).scaled(Scalar::i());
  s.ambient_dim = 3;
  s.holo_vars_ = {"z", "zeta", "w"};
  return s;
}

Hypersurface make_s3() {
  Hypersurface s;
  s.tag = Surface::S3;
  s.alpha = alpha_s3();
  auto z = pvar(s.alpha, "z"), w = pvar(s.alpha, "w");
  auto zb = pvar(s.alpha, "zb"), wb = pvar(s.alpha, "wb");
  Poly one = pconst(s.alpha, Scalar(1));
  s.defining_num = one - z * zb - w * wb;
  s.defining_den = one;
  s.normalized_num = s.defining_num;
  s.normalized_den = one;
  s.solved_var = s.alpha->index_of("zb");
  s.rule_num = one - w * wb;
  s.rule_den = z;
  s.ambient_dim = 2;
  s.holo_vars_ = {"z", "w"};
  return s;
}

Hypersurface make_d4() {
  Hypersurface s;
  s.tag = Surface::D4;
  s.alpha = alpha_d4();
  Poly one = pconst(s.alpha, Scalar(1));
  Poly herm(s.alpha), zz(s.alpha), zzb(s.alpha);
  for (auto v : {"z1", "z2", "z3"}) {
    auto x = pvar(s.alpha, v);
    auto xb = pvar(s.alpha, std::string(v) + "b");
    herm += x * xb;
    zz += x * x;
    zzb += xb * xb;
  }
  s.defining_num = one - herm.scaled_long(2) + zz * zzb;
  s.defining_den = one;
  s.normalized_num = s.defining_num;
  s.normalized_den = one;
  s.solved_var = -1;  // quadratic in every conjugate variable
  s.ambient_dim = 3;
  s.holo_vars_ = {"z1", "z2", "z3"};
  return s;
}

}  // namespace

std::string surface_name(Surface s) {
  switch (s) {
    case Surface::H3: return "H3";
    case Surface::X: return "X";
    case Surface::S3: return "S3";
    case Surface::D4: return "D4";
  }
  return "?";
}

std::optional<Surface> surface_from_name(const std::string& name) {
  if (name == "H3") return Surface::H3;
  if (name == "X") return Surface::X;
  if (name == "S3") return Surface::S3;
  if (name == "D4") return Surface::D4;
  return std::nullopt;
}

const Hypersurface& surface(Surface tag) {
  static const Hypersurface h3 = make_h3();
  static const Hypersurface x = make_x();
  static const Hypersurface s3 = make_s3();
  static const Hypersurface d4 = make_d4();
  switch (tag) {
    case Surface::H3: return h3;
    case Surface::X: return x;
    case Surface::S3: return s3;
    case Surface::D4: return d4;
  }
  throw std::logic_error("surface: bad tag");
}

Poly eval_point(const Poly& p, const AlphabetPtr& alpha, const std::vector<Scalar>& point) {
  const auto& surf_alpha = *alpha;
  int holo = surf_alpha.size() / 2;
  if (static_cast<int>(point.size()) != holo)
    throw std::invalid_argument("eval_point: point dimension mismatch");
  std::map<std::string, Poly> bindings;
  for (int k = 0; k < holo; ++k) {
    bindings.emplace(surf_alpha.vars[k], Poly(alpha, point[k]));
    bindings.emplace(surf_alpha.vars[surf_alpha.conj[k]], Poly(alpha, point[k].conj()));
  }
  return substitute(p, bindings);
}

Scalar eval_defining(const Hypersurface& s, const std::vector<Scalar>& point) {
  Poly num = eval_point(s.defining_num, s.alpha, point);
  Poly den = eval_point(s.defining_den, s.alpha, point);
  if (den.is_zero()) throw std::domain_error("eval_defining: denominator vanishes at point");
  Poly q = constant_inverse(den) * num;
  if (!CoeffOps<Scalar>::is_zero(q.sqrt2_term(Scalar(0))))
    throw std::domain_error("eval_defining: value not in Q(i)");
  return q.constant_term(Scalar(0));
}

bool on_surface(const Hypersurface& s, const std::vector<Scalar>& point) {
  return eval_defining(s, point).is_zero();
}

Poly segre_complexify(const Poly& expr, const Hypersurface& s, bool fallback) {
  if (expr.alphabet() != s.alpha)
    throw std::invalid_argument("segre_complexify: expression alphabet mismatch");
  int var = s.solved_var;
  Poly num = s.rule_num, den = s.rule_den;
  if (s.tag == Surface::S3 && fallback) {
    var = s.alpha->index_of("wb");
    Poly one = Poly(s.alpha, Scalar(1));
    num = one - Poly::var(s.alpha, "z", Scalar(1)) * Poly::var(s.alpha, "zb", Scalar(1));
    den = Poly::var(s.alpha, "w", Scalar(1));
  }
  if (var < 0)
    throw std::invalid_argument("segre_complexify: surface has no solved-variable rule");
  std::map<std::string, RationalBinding<Scalar>> b;
  b.emplace(s.alpha->vars[var], RationalBinding<Scalar>{num, den});
  return substitute_rational(expr, b).value;
}

CRField CRField::conjugate() const {
  CRField out;
  out.tag = tag;
  out.alpha = alpha;
  for (const auto& [var, c] : coeffs) out.coeffs.emplace_back(alpha->conj[var], c.conj());
  return out;
}

const CRField& field_L_H3() {
  static const CRField f = [] {
    CRField f;
    f.tag = FieldTag::L_H3;
    f.alpha = alpha_h3();
    f.coeffs.emplace_back(f.alpha->index_of("z"), Poly(f.alpha, Scalar(1)));
    f.coeffs.emplace_back(f.alpha->index_of("w"),
                          Poly::var(f.alpha, "zb", Scalar::imag_ratio(2, 1)));
    return f;
  }();
  return f;
}

const CRField& field_Z1_S3() {
  static const CRField f = [] {
    CRField f;
    f.tag = FieldTag::Z1_S3;
    f.alpha = alpha_s3();
    f.coeffs.emplace_back(f.alpha->index_of("z"), Poly::var(f.alpha, "wb", Scalar(1)));
    f.coeffs.emplace_back(f.alpha->index_of("w"), Poly::var(f.alpha, "zb", Scalar(-1)));
    return f;
  }();
  return f;
}

Poly apply_field(const CRField& f, const Poly& expr, int k) {
  Poly out = expr;
  for (int step = 0; step < k; ++step) {
    Poly next(out.alphabet());
    for (const auto& [var, c] : f.coeffs) next += c * out.derivative(var);
    out = std::move(next);
  }
  return out;
}

Series apply_field(const CRField& f, const Series& expr, int k) {
  Series out = expr;
  for (int step = 0; step < k; ++step) {
    // each coefficient has weight >= weight of the differentiated variable,
    // except the weight-raising zb coefficient of L, so track the worst drop
    int order = out.order();
    Series next(Poly(out.alphabet()), order);
    bool first = true;
    for (const auto& [var, c] : f.coeffs) {
      Series d = out.derivative(var);
      Series piece = SeriesT<Scalar>(c.mul(d.body(), d.order()), d.order());
      next = first ? piece : next + piece;
      first = false;
    }
    out = next;
  }
  return out;
}

}  // namespace crlc
