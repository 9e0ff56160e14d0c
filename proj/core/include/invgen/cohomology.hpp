#ifndef INVGEN_COHOMOLOGY_HPP
#define INVGEN_COHOMOLOGY_HPP

#include <cstdint>

#include "invgen/gmodule.hpp"

namespace invgen {

constexpr uint64_t kDefaultCohomologyCap = 60;

/// dim H^1(G,V) = dim Z^1 - dim B^1, with cocycles f(gh) = f(g).rho(h) + f(h)
/// solved as one linear system over all pairs (g,h) of the multiplication
/// table, and principal derivations v -> (v.rho(g) - v).
uint32_t h1_dim(const GModule &V, uint64_t cohomology_cap = kDefaultCohomologyCap);

} // namespace invgen

#endif
