#ifndef INVGEN_CONFIG_HPP
#define INVGEN_CONFIG_HPP

#include <cstdint>
#include <string>

#include "invgen/cohomology.hpp"
#include "invgen/lifting.hpp"
#include "invgen/perm_group.hpp"
#include "invgen/subgroups.hpp"

namespace invgen {

struct RunConfig {
  uint64_t order_cap = PermGroup::kDefaultOrderCap;
  uint64_t subgroup_cap = kDefaultSubgroupCap;
  uint64_t cohomology_cap = kDefaultCohomologyCap;
  uint64_t brute_budget = kDefaultWitnessBudget;
  uint64_t seed = 0;
  std::string format = "json"; // json | csv
  std::string out_path;        // empty = stdout
  uint32_t threads = 1;
  bool recheck = false;
};

} // namespace invgen

#endif
