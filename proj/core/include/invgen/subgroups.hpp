#ifndef INVGEN_SUBGROUPS_HPP
#define INVGEN_SUBGROUPS_HPP

#include <cstdint>
#include <vector>

#include "invgen/bitset.hpp"
#include "invgen/perm_group.hpp"

namespace invgen {

struct SubgroupClass {
  Bitset elems; // representative subgroup as an element-id set
  std::vector<uint32_t> gen_ids;
  uint64_t order;
  uint32_t conjugate_count;
  bool is_maximal; // maximal among proper subgroups
  bool is_normal;
};

/// All subgroups of a soluble group up to conjugacy, found by cyclic
/// extension: every soluble subgroup sits at the top of a subnormal chain
/// with prime indices, so extending each known class U by prime-order cosets
/// of its normalizer reaches everything.
struct SubgroupClassTable {
  std::vector<SubgroupClass> classes; // sorted by order, then canonically
  std::vector<uint32_t> maximal_ids;
  std::vector<Bitset> maximal_conjugate_union; // aligned with maximal_ids
  Bitset frattini;
  std::vector<uint32_t> frattini_gens;
  uint64_t group_order = 1;

  const SubgroupClass &cls(uint32_t i) const { return classes[i]; }
};

constexpr uint64_t kDefaultSubgroupCap = 2000;

/// Cached on the group after the first computation.
const SubgroupClassTable &subgroup_class_table(const PermGroup &G,
                                               uint64_t subgroup_cap = kDefaultSubgroupCap);

} // namespace invgen

#endif
