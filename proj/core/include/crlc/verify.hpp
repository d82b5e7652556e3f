#pragma once

#include "crlc/catalog.hpp"

namespace crlc {

enum class VerifyStatus { Pass, Fail, Inconclusive };

struct VerifyReport {
  VerifyStatus status = VerifyStatus::Fail;
  std::string mode;  // "exact" or "series"
  std::optional<int> order;
  Poly residual;  // complexified residual; zero iff pass
  std::optional<std::pair<Poly, Poly>> quotient;  // num, den over the source alphabet
  std::string residual_leading;
  std::string map_name;
  Surface source = Surface::H3, target = Surface::X;
  bool normalized_defining = false;

  bool passed() const { return status == VerifyStatus::Pass; }
};

/// rho_target(H, conj H) as one cleared fraction over the source alphabet.
struct PulledBack {
  Poly num, den;
};
PulledBack pull_back_defining(const RationalMap& H, bool normalized = false);

/// Exact verification that H maps its source hypersurface into its target:
/// the pulled-back defining numerator must vanish on the complexified source.
VerifyReport mapping_residual(const RationalMap& H);

/// Series verification for a formal germ (H3,0) -> (X,0) at weighted order.
VerifyReport mapping_residual(const MapGerm& germ, int order);

/// Series verification for a sphere-side germ about an interior center: here
/// the check is the exact identity rho_D4 o H == rho_S3 (unit quotient).
VerifyReport mapping_residual(const SphereGerm& germ, int order);

/// Convenience dispatch over catalog values.
VerifyReport mapping_residual(const CatalogValue& v, bool series_mode = false, int order = 20);

/// Exact quotient rho_tgt o H = Q * rho_src; requires a passing residual.
/// Returns Q as a cleared fraction (num, den over the source alphabet).
std::pair<Poly, Poly> quotient_Q(const RationalMap& H, bool normalized = false);

struct Transversality {
  bool transversal = false;
  Scalar witness;  // value of Q at the point (when in Q(i))
};

/// CR transversality of H at a source point; throws domain_error when the
/// image lies in the singular part of the target boundary.
Transversality transversality(const RationalMap& H, const std::vector<Scalar>& point);
/// Germ version at 0: Q(0) = g_w(0).
Transversality transversality(const MapGerm& germ);

/// Ahlfors tensor value A(H)(field, conj field) at a point: the mixed
/// log-Hessian of the quotient for the Ahlfors-normalized defining
/// functions, contracted with the field. Exact.
Scalar ahlfors(const RationalMap& H, const std::vector<Scalar>& point, const CRField& field);

/// Ahlfors value at 0 of a germ (H3,0) -> (X,0), via the series quotient for
/// the normalized defining function of X.
Scalar ahlfors_germ(const MapGerm& germ);

/// Geometric rank in {0,1}: vanishing of the Ahlfors value.
int geometric_rank(const RationalMap& H, const std::vector<Scalar>& point, const CRField& field);
int geometric_rank(const MapGerm& germ);

/// 2 sum |h_j|^2 - |sum h_j^2|^2 == sum |f_j|^2 as an exact identity;
/// H has 3 components (into the type-IV variety), F arbitrarily many.
bool xy_identity(const RationalMap& H, const std::vector<MapComponent>& F);

/// Series quotient Q with rho_X-tilde o germ == Q * rho_H3, at germ order-2.
Series series_quotient_normalized(const MapGerm& germ);

}  // namespace crlc
