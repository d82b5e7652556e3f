#pragma once

#include "crlc/verify.hpp"

namespace crlc {

enum class ClassKind { Linear_ell, R_plus, R_minus, Iota, Nontransversal };

std::string class_name(ClassKind k);

struct ClassLabel {
  ClassKind kind;
  std::optional<Series> phi;  // the CR function of a nontransversal germ
};

enum class Backend { Exact, Numeric };

/// Weight-2 normal form data
///   f = z + (i/2) a z w + nu w^2 + O(3)
///   phi = lambda w + a z^2 + mu z w + sigma w^2 + O(3)
///   g = w + O(3)
/// plus the higher jet parameters eta, xi, gamma with
/// f^(1,2) = eta + i xi and f^(1,3) = gamma + (3i/2) a eta.
/// Exact values may carry a sqrt2 part, hence constant polynomials.
struct NormalFormData {
  Poly lambda, alpha, mu, nu, sigma;
  Poly eta, xi, gamma;
  Backend backend = Backend::Exact;
  mpfr_prec_t precision = 128;
  // scaling targets recorded separately from the weight-2 normalization
  int lambda_final = 0;  // 0 or 1
  int alpha_final = 0;   // -1, 0 or 1 (meaningful when lambda = mu = 0)

  bool lambda_zero() const { return lambda.is_zero(); }
};

struct NormalFormResult {
  NormalFormData data;
  MapGerm normalized;
  // the automorphisms realizing the normalization, as germ-transform
  // descriptions: normalized == target_steps o germ o source_steps
  std::string steps;
};

/// Weight-2 normalization of a transversal germ.
NormalFormResult partial_normal_form(const MapGerm& germ);

/// Numeric twin of the normalization, for germs whose normalization leaves
/// Q(i)[sqrt2]. Zero tests use the 10^-20 threshold with an inconclusive
/// band up to 10^-19.
struct NumNormalFormData {
  NumComplex lambda, alpha, mu, nu, sigma;
  mpfr_prec_t precision;
};
NumNormalFormData partial_normal_form_numeric(const MapGerm& germ, mpfr_prec_t precision = 128);

/// Moves the germ of H at p to a germ at 0 with value 0, composing with a
/// source Heisenberg translation and target transitive automorphisms.
MapGerm recenter(const RationalMap& H, const std::vector<Scalar>& p, int order = 20);

/// Certifies f == g == 0 for a nowhere-transversal germ and returns phi.
Series nontransversal_reduce(const MapGerm& germ, int order);

/// Five-way classification of a verified germ (H3,0) -> (X,0).
ClassLabel classify(const MapGerm& germ, int order = 20);

}  // namespace crlc
