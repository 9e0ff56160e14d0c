#ifndef INVGEN_BUILDERS_HPP
#define INVGEN_BUILDERS_HPP

#include <cstdint>
#include <string>

#include "invgen/structured.hpp"

namespace invgen {

PermGroupPtr cyclic_group(uint32_t n);
PermGroupPtr symmetric_group(uint32_t n, uint64_t order_cap = PermGroup::kDefaultOrderCap);
PermGroupPtr alternating_group(uint32_t n, uint64_t order_cap = PermGroup::kDefaultOrderCap);
PermGroupPtr dihedral_group(uint32_t n); // order 2n

/// C_n x| C_m with the generator of C_m acting by x -> x^k.
/// Requires gcd(k, n) = 1 and k^m = 1 (mod n).
PermGroupPtr sdc_group(uint32_t n, uint32_t m, uint32_t k);

/// V^u x| G with G acting diagonally; V any module for G.
StructuredGroupPtr semidirect_module_group(const GModule &V, uint32_t u,
                                           StructuredGroupPtr G, std::string expr = "",
                                           uint64_t meataxe_seed = 0x5EED);

/// C_q^m wr G (regular): (F_qG)^m x| G; requires gcd(q,|G|) = 1 so that the
/// recorded d value max(d(G), m+1) applies.
StructuredGroupPtr wreath_regular(uint64_t q, uint32_t m, StructuredGroupPtr G,
                                  std::string expr = "",
                                  uint64_t order_cap = PermGroup::kDefaultOrderCap);

/// The supersoluble family with d(G) = d and d_I(G) >= 2d-1:
/// (prod_i V_i^(d-1)) x| C_2^d over all 2^d - 1 one-dimensional F_3 lines.
StructuredGroupPtr prop_geq_group(uint32_t d);

/// The derived-length tower: G_1 = C_p^d, G_{l+1} = (F_q G_l)^(d-1) x| G_l at
/// the smallest splitting prime of each level. Requires l < (p-1)/(d-1) + 1.
StructuredGroupPtr tower_group(uint32_t d, uint64_t p, uint32_t l,
                               uint64_t order_cap = PermGroup::kDefaultOrderCap);

} // namespace invgen

#endif
