#pragma once

#include <memory>
#include <string>
#include <vector>

namespace crlc {

/// Ordered variable set with positive integer weights and a conjugation
/// involution pairing each variable with its formal conjugate.
struct VarAlphabet {
  std::string name;
  std::vector<std::string> vars;
  std::vector<int> weight;
  std::vector<int> conj;  // conj[conj[k]] == k, weight[conj[k]] == weight[k]

  int size() const { return static_cast<int>(vars.size()); }
  int index_of(const std::string& v) const;
  bool has(const std::string& v) const;
};

using AlphabetPtr = std::shared_ptr<const VarAlphabet>;

AlphabetPtr make_alphabet(std::string name, std::vector<std::string> vars,
                          std::vector<int> weights, std::vector<int> conj);

// Fixed alphabets of the toolkit. Holomorphic variables come first, their
// formal conjugates (suffix "b") after, paired by the involution.

/// z, w, zb, wb with weights 1, 2, 1, 2 (Heisenberg grading).
const AlphabetPtr& alpha_h3();
/// z, zeta, w, zb, zetab, wb for the light-cone model target.
const AlphabetPtr& alpha_x();
/// z, w, zb, wb with weights 1, 1, 1, 1 (sphere / ball).
const AlphabetPtr& alpha_s3();
/// z1, z2, z3, z1b, z2b, z3b for the type-IV domain.
const AlphabetPtr& alpha_d4();

}  // namespace crlc
