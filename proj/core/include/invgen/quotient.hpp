#ifndef INVGEN_QUOTIENT_HPP
#define INVGEN_QUOTIENT_HPP

#include <cstdint>
#include <vector>

#include "invgen/bitset.hpp"
#include "invgen/perm_group.hpp"

namespace invgen {

/// G/N realized faithfully on the right cosets of N, with the epimorphism
/// kept so elements can be pushed forward.
struct Quotient {
  PermGroupPtr group;
  PermGroupPtr parent;
  Bitset kernel;
  std::vector<uint32_t> coset_of;  // parent id -> coset point
  std::vector<uint32_t> push_elem; // parent id -> quotient element id

  uint32_t push(uint32_t parent_id) const { return push_elem[parent_id]; }
};

Quotient make_quotient(PermGroupPtr G, const Bitset &N,
                       uint64_t order_cap = PermGroup::kDefaultOrderCap);

} // namespace invgen

#endif
