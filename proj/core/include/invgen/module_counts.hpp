#ifndef INVGEN_MODULE_COUNTS_HPP
#define INVGEN_MODULE_COUNTS_HPP

#include <cstdint>
#include <vector>

#include "invgen/gmodule.hpp"

namespace invgen {

/// Least prime q with exp(G) | q - 1; F_q is then a splitting field and is
/// automatically coprime to |G|.
uint64_t smallest_splitting_prime(const PermGroup &G);

/// A = A_1^{n_1} x ... x A_r^{n_r}, irreducible pairwise non-isomorphic
/// summands over (possibly different) prime fields.
struct ModuleSum {
  struct Summand {
    GModule module;
    uint32_t multiplicity;
  };
  std::vector<Summand> summands;
};

/// Minimal number of G-module generators of A:
/// d_G(A) = max_i ceil(n_i / r_G(A_i)).
uint32_t d_G_module(const ModuleSum &A);

} // namespace invgen

#endif
