#pragma once

#include <optional>
#include <vector>

#include "crlc/substitute.hpp"

namespace crlc {

enum class Surface { H3, X, S3, D4 };

std::string surface_name(Surface s);
std::optional<Surface> surface_from_name(const std::string& name);

/// One real hypersurface: defining function rho = num/den, the solved-variable
/// substitution used for complexified verification, and the normalized
/// defining function used by the Ahlfors tensor.
struct Hypersurface {
  Surface tag;
  AlphabetPtr alpha;
  Poly defining_num, defining_den;
  Poly normalized_num, normalized_den;
  // segre rule: solved_var -> rule_num / rule_den (rule_den == 1 for H3)
  int solved_var = -1;
  Poly rule_num, rule_den;
  int ambient_dim = 2;  // holomorphic coordinates

  const std::vector<std::string>& holo_vars() const { return holo_vars_; }
  std::vector<std::string> holo_vars_;
};

const Hypersurface& surface(Surface tag);

/// Exact value of rho at a holomorphic point (conjugate slots filled by
/// conjugation). Throws when the denominator vanishes there.
Scalar eval_defining(const Hypersurface& s, const std::vector<Scalar>& point);

bool on_surface(const Hypersurface& s, const std::vector<Scalar>& point);

/// Constant value of an exact polynomial at a holomorphic point, conjugate
/// variables bound to conjugated values. Result is a degree-0 polynomial
/// (it may carry a sqrt2 part).
Poly eval_point(const Poly& p, const AlphabetPtr& alpha, const std::vector<Scalar>& point);

/// Substitutes the surface's solved variable, clearing denominators; the
/// result vanishes identically iff expr vanishes on the complexified surface.
/// For S3 `fallback` solves for wb (clearing w) instead of zb (clearing z).
Poly segre_complexify(const Poly& expr, const Hypersurface& s, bool fallback = false);

/// CR vector fields used by the toolkit.
enum class FieldTag { L_H3, Z1_S3 };

struct CRField {
  FieldTag tag;
  AlphabetPtr alpha;
  // pairs (variable index, coefficient polynomial)
  std::vector<std::pair<int, Poly>> coeffs;

  CRField conjugate() const;
};

const CRField& field_L_H3();
const CRField& field_Z1_S3();

Poly apply_field(const CRField& f, const Poly& expr, int k = 1);
Series apply_field(const CRField& f, const Series& expr, int k = 1);

}  // namespace crlc
