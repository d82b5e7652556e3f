#pragma once

#include "crlc/rational_map.hpp"

namespace crlc {

/// Parameters of the stability group Aut(X,0): a complex, t real, |u| = 1,
/// lambda > 0. u is typically produced from a rational circle parameter via
/// unit_from_circle so that group computations stay in Q(i).
struct StabParamsX {
  Scalar a;
  Scalar t;       // real
  Scalar u;       // unit modulus, checked
  Scalar lambda;  // positive rational

  void validate() const;
};

/// u = (1 - i s)/(1 + i s), exactly unit for rational s.
Scalar unit_from_circle(const Scalar& s);

RationalMap stab_X(const StabParamsX& p);

/// Parameter-level inverse: stab_X(p) o stab_X(stab_X_inverse(p)) == id.
StabParamsX stab_X_inverse(const StabParamsX& p);

/// tau_{b,r}: the g_{-1} (+) g_{-2} translation family of X, mapping
/// 0 to (b, 0, r + i|b|^2 + i bbar^2/2 - i b^2/2).
RationalMap trans_tau(const Scalar& b, const Scalar& r);

/// The two dilation flows of g_0^s moving the zeta disc. Exactness requires
/// sqrt(lambda) in Q(sqrt2), i.e. lambda = s^2 or 2 s^2 for rational s.
RationalMap trans_dilation_lambda(const Scalar& lambda_prime);
RationalMap trans_dilation_mu(const Scalar& mu_prime);

/// Heisenberg stability group element
///   (z,w) -> (lambda u (z + c w), lambda^2 w) / (1 - 2i cbar z + (r - i|c|^2) w).
RationalMap stab_H3(const Scalar& c, const Scalar& r, const Scalar& u, const Scalar& lambda);

/// Heisenberg translation moving 0 to p = (z0, w0) in H3.
RationalMap heis_translation(const Scalar& z0, const Scalar& w0);

struct AutD4 {
  RationalMap map;       // Phi o stab_X(p) o PhiInv, composed exactly
  std::vector<Scalar> W; // the point sent to 0
  Poly delta;            // claimed reduced denominator (degree 2 in z1,z2,z3)
  Scalar prefactor;      // 1 + 2|a|^2 + lambda^2 - 2it
};

AutD4 aut_D4(const StabParamsX& p);

/// sqrt of a positive rational inside Q(sqrt2), as a constant polynomial
/// over the given alphabet; nullopt when the root is not of the form
/// q or q*sqrt2 with q rational.
std::optional<Poly> sqrt_in_ring(const mpq_class& value, const AlphabetPtr& alpha);

}  // namespace crlc
