#include "crlc/alphabet.hpp"

#include <stdexcept>

namespace crlc {

int VarAlphabet::index_of(const std::string& v) const {
  for (int k = 0; k < size(); ++k)
    if (vars[k] == v) return k;
  throw std::invalid_argument("unknown variable '" + v + "' in alphabet " + name);
}

bool VarAlphabet::has(const std::string& v) const {
  for (const auto& x : vars)
    if (x == v) return true;
  return false;
}

AlphabetPtr make_alphabet(std::string name, std::vector<std::string> vars,
                          std::vector<int> weights, std::vector<int> conj) {
  if (vars.size() != weights.size() || vars.size() != conj.size())
    throw std::invalid_argument("make_alphabet: mismatched field sizes");
  for (size_t k = 0; k < conj.size(); ++k) {
    if (conj[conj[k]] != static_cast<int>(k))
      throw std::invalid_argument("make_alphabet: conj is not an involution");
    if (weights[conj[k]] != weights[k])
      throw std::invalid_argument("make_alphabet: conjugate pair with unequal weights");
    if (weights[k] <= 0) throw std::invalid_argument("make_alphabet: nonpositive weight");
  }
  auto a = std::make_shared<VarAlphabet>();
  a->name = std::move(name);
  a->vars = std::move(vars);
  a->weight = std::move(weights);
  a->conj = std::move(conj);
  return a;
}

const AlphabetPtr& alpha_h3() {
  static AlphabetPtr a =
      make_alphabet("H3", {"z", "w", "zb", "wb"}, {1, 2, 1, 2}, {2, 3, 0, 1});
  return a;
}

const AlphabetPtr& alpha_x() {
  static AlphabetPtr a = make_alphabet("X", {"z", "zeta", "w", "zb", "zetab", "wb"},
                                       {1, 2, 2, 1, 2, 2}, {3, 4, 5, 0, 1, 2});
  return a;
}

const AlphabetPtr& alpha_s3() {
  static AlphabetPtr a =
      make_alphabet("S3", {"z", "w", "zb", "wb"}, {1, 1, 1, 1}, {2, 3, 0, 1});
  return a;
}

const AlphabetPtr& alpha_d4() {
  static AlphabetPtr a =
      make_alphabet("D4", {"z1", "z2", "z3", "z1b", "z2b", "z3b"},
                    {1, 1, 1, 1, 1, 1}, {3, 4, 5, 0, 1, 2});
  return a;
}

}  // namespace crlc
