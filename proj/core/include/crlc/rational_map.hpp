#pragma once

#include <optional>

#include "crlc/hypersurface.hpp"

namespace crlc {

/// One component of a rational map, num/den over the source alphabet
/// (holomorphic variables only).
struct MapComponent {
  Poly num, den;
};

/// Rational map between two of the model hypersurfaces, stored exactly over
/// Q(i)[sqrt2]. `display_scale_sq` only records that the usual displayed
/// normalization differs from the stored one by 1/sqrt(s); the stored
/// components are always the true ones.
class RationalMap {
 public:
  RationalMap() = default;
  RationalMap(Surface source, Surface target, std::vector<MapComponent> comps,
              std::vector<Scalar> center, std::string name = {});

  Surface source() const { return source_; }
  Surface target() const { return target_; }
  const std::vector<MapComponent>& comps() const { return comps_; }
  const std::vector<Scalar>& center() const { return center_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  RationalMap negated() const;

  /// Values of all components at a holomorphic point, as degree-0
  /// polynomials (they may carry a sqrt2 part).
  std::vector<Poly> value_at(const std::vector<Scalar>& point) const;
  /// Same, requiring every value to land in Q(i).
  std::vector<Scalar> rational_value_at(const std::vector<Scalar>& point) const;

  static RationalMap identity(Surface s);

 private:
  Surface source_ = Surface::H3, target_ = Surface::X;
  std::vector<MapComponent> comps_;
  std::vector<Scalar> center_;
  std::string name_;
};

/// Exact composition F(G(.)) with denominators cleared; fractions are not
/// reduced.
RationalMap compose(const RationalMap& F, const RationalMap& G);

/// Componentwise cross-multiplication test num_F*den_G == num_G*den_F.
bool rational_maps_equal(const RationalMap& F, const RationalMap& G);

/// Formal map germ (H3,0) -> (X,0): triple of series in z, w.
struct MapGerm {
  Series f, phi, g;

  int order() const { return f.order(); }
  const AlphabetPtr& alphabet() const { return f.alphabet(); }

  /// Coefficient of z^a w^b in the chosen component (0=f, 1=phi, 2=g).
  Scalar jet(int comp, int a, int b) const;
  const Series& comp(int k) const { return k == 0 ? f : k == 1 ? phi : g; }

  MapGerm truncated(int order) const {
    return MapGerm{f.truncated(order), phi.truncated(order), g.truncated(order)};
  }
};

/// Checks g(z,0) == 0 and vanishing constant terms; throws on violation.
void check_germ_shape(const MapGerm& germ);

/// Weighted Taylor expansion of a rational map about its center. The center
/// must be the origin with H(0) = 0 for H3 -> X maps; use normal_form's
/// recenter for anything else.
MapGerm taylor_germ(const RationalMap& map, int order);

/// Series expansion of one rational component at 0 (den(0) != 0 required).
Series component_series(const MapComponent& comp, const AlphabetPtr& alpha, int order);

/// Germ of psi o germ for a rational target automorphism psi fixing 0.
MapGerm postcompose_germ(const RationalMap& psi, const MapGerm& germ);

/// Germ of germ o gamma for a rational source automorphism gamma fixing 0.
MapGerm precompose_germ(const MapGerm& germ, const RationalMap& gamma);

}  // namespace crlc
