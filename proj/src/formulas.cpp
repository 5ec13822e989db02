#include "refdefect/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace refdefect {

int defect_term(OperatorFamily kind, int p, int r, const Scalar& lam, const Scalar& mu, int k) {
  if (p < 1 || r < 1 || k < 1) throw std::invalid_argument("defect_term: p, r, k must be >= 1");
  int d = std::min(p, r);
  if (k >= d) return 0;
  bool resonant = kind == OperatorFamily::derivation
                      ? lam == mu
                      : (!lam.is_zero() && !mu.is_zero() && lam * mu == Scalar(1));
  return resonant ? d - k : 0;
}

int rd_k_formula(OperatorFamily kind, const JordanSpec& a, const JordanSpec& b, int k) {
  int total = 0;
  for (const JordanBlock& pa : a.blocks)
    for (const JordanBlock& pb : b.blocks)
      total += defect_term(kind, pa.size, pb.size, pa.eig, pb.eig, k);
  return total;
}

bool is_k_reflexive_image(const JordanSpec& a, const JordanSpec& b, int k) {
  for (const auto& [eig, mult] : gcd_root_multiplicities(a, b)) {
    (void)eig;
    if (mult > k) return false;
  }
  return true;
}

const char* family_name(OperatorFamily f) {
  return f == OperatorFamily::derivation ? "derivation" : "mult";
}

OperatorFamily family_from_name(const std::string& name) {
  if (name == "derivation") return OperatorFamily::derivation;
  if (name == "mult") return OperatorFamily::mult;
  throw std::invalid_argument("unknown operator family: \"" + name + "\"");
}

}  // namespace refdefect
