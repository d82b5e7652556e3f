#pragma once

#include "crlc/normal_form.hpp"

namespace crlc {

/// Weight-2 normal form parameters used by the Segre machinery.
struct NfParams {
  Scalar lambda, alpha, mu, nu, sigma;
};

/// First Segre profiles of a normal-form germ: f, phi and the auxiliary
/// functions r, s restricted to Sigma = {w = 0}, as series in z.
struct FirstSegre {
  Series f, phi, r, s;
};

FirstSegre first_segre_profile(const NfParams& nf, int order);

/// Auxiliary functions of the quotient Q(z,w,zb,wb) of a verified germ:
/// low-order zb/wb-derivatives of Q at zb = wb = 0, restricted to Sigma,
/// plus the unrestricted (z,w) versions of r and s.
struct AuxProfiles {
  Series r, s;        // first derivatives, on Sigma
  Series p, t, q;     // second derivatives, on Sigma
  Series k, l, m, n;  // third derivatives, on Sigma
  Series r_full, s_full;  // (z,w) series before restriction
  Series Q_full;          // Q(z,w,0,0)
};

AuxProfiles aux_profiles(const MapGerm& germ, int order);

struct Jet3 {
  Scalar f12, f03, g03, phi21, phi12, phi03;
};

/// Determinant of the augmented third-order system along Sigma, a series in
/// z; it vanishes identically iff the system is solvable.
Series weight3_solvability(const NfParams& nf, const Jet3& jet, int order);

/// Parameters of the lambda = 0 functional equations: alpha real and the
/// jets f^(1,2), f^(1,3).
struct FunctionalParams {
  Scalar alpha;
  Scalar f12;
  Scalar f13;
};

/// Residuals of the three holomorphic functional equations (the mapping
/// equation and its first and second conjugate CR derivatives along the
/// second Segre set), with denominators cleared.
std::array<Series, 3> functional_residuals(const MapGerm& germ, const FunctionalParams& fp);

/// Unique weight-by-weight solution of the three functional equations.
MapGerm solve_functional_system(const FunctionalParams& fp, int order);

struct ConstraintPoint {
  Scalar alpha, eta, xi, gamma;
};

/// Exact values of the three constraint polynomials in (alpha, eta, xi,
/// gamma).
std::array<Scalar, 3> constraint_residuals(const ConstraintPoint& cp);

struct ConstraintSolution {
  bool unique = true;
  Scalar eta, xi, gamma;
  std::string note;
};

/// Solves the constraint system for a given real alpha by elimination;
/// for alpha = 0 the weight-16 condition gamma eta^2 = 0 is
/// intersected in.
ConstraintSolution solve_constraints(const Scalar& alpha);

/// The germ obtained by solving the mapping equation along the second Segre
/// set in the lambda != 0 case (lambda normalized to 1).
MapGerm iota_second_segre(int order);

/// Jet relations of the third order expressed by the first Segre analysis:
/// f^(3,0) = 6i conj(lambda), g^(2,1) = 2i conj(lambda),
/// g^(1,2) = 4i conj(nu), phi^(3,0) = 6(8 conj(nu) + 2i conj(mu)).
bool weight3_jet_relations(const MapGerm& germ, const NfParams& nf);

}  // namespace crlc
