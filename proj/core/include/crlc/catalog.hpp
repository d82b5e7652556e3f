#pragma once

#include <variant>

#include "crlc/rational_map.hpp"

namespace crlc {

/// Germ of a sphere-side map at an interior center (used for the irrational
/// isometry I, expanded about the origin of the ball).
struct SphereGerm {
  std::array<Series, 3> comps;
  Surface source = Surface::S3;
  Surface target = Surface::D4;
};

using CatalogValue = std::variant<RationalMap, MapGerm, SphereGerm>;

/// Fixed catalog names:
///   ell, r_beta, iota, t_phi, Phi, PhiInv, Cayley, gamma0, gamma1,
///   R0, P1, Pm1, I, Ht, H0, XY_R, Psi1, Psi2,
///   ex52_phi, ex52_phi1p, ex52_phi2p, ex52_phihat, ex52_phip
/// Parameters: r_beta takes beta; Ht takes t; iota/I/t_phi honor `order`.
CatalogValue catalog_map(const std::string& name,
                         const std::map<std::string, Scalar>& params = {},
                         int order = 20);

std::vector<std::string> catalog_names();

/// Germ (0, phi, 0) for a CR function phi of the germ variables z, w with
/// phi(0) = 0.
MapGerm nontransversal_germ(const Poly& phi, int order);

/// The iota germ: (2z, 2w, 2w) / (1 + sqrt(1 - 4w^2 - 4iz^2)).
MapGerm iota_germ(int order);

/// The isometry I = (z, w, 1 - sqrt(1 - z^2 - w^2)) / sqrt2 about 0.
SphereGerm I_germ(int order);

}  // namespace crlc
