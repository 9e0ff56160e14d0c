#include "invgen/module_counts.hpp"

#include "invgen/errors.hpp"
#include "invgen/meataxe.hpp"

namespace invgen {

uint64_t smallest_splitting_prime(const PermGroup &G) {
  const uint64_t e = G.exponent();
  for (uint64_t k = 1;; ++k) {
    uint64_t q = k * e + 1;
    if (q >= (uint64_t(1) << 31))
      throw Error(ErrorKind::SearchBoundExceeded, "no splitting prime below 2^31");
    if (!is_prime_u64(q)) continue;
    if (G.order() % q == 0)
      throw Error(ErrorKind::SplittingAssumptionViolated,
                  "splitting prime divides the group order"); // impossible for e > 1
    return q;
  }
}

uint32_t d_G_module(const ModuleSum &A) {
  uint32_t best = 0;
  for (std::size_t i = 0; i < A.summands.size(); ++i) {
    const auto &S = A.summands[i];
    for (std::size_t j = i + 1; j < A.summands.size(); ++j) {
      const auto &T = A.summands[j];
      if (S.module.q == T.module.q && S.module.group.get() == T.module.group.get() &&
          modules_isomorphic(S.module, T.module))
        throw Error(ErrorKind::DuplicateIsomorphismClass,
                    "module sum has two isomorphic summands");
    }
    uint32_t r = r_G(S.module);
    uint32_t need = (S.multiplicity + r - 1) / r;
    best = std::max(best, need);
  }
  return best;
}

} // namespace invgen
