#ifndef INVGEN_CATALOG_HPP
#define INVGEN_CATALOG_HPP

#include <string>
#include <vector>

#include "invgen/structured.hpp"

namespace invgen {

struct CatalogEntry {
  std::string expr;
  StructuredGroupPtr structured;
  PermGroupPtr group; // materialized
};

/// The verification catalog: cyclic groups up to C12, the small elementary
/// abelian groups, S3, D4-D6, Q8, A4, the sdc Frobenius groups and the
/// materialized geq(2).
const std::vector<CatalogEntry> &verification_catalog();

} // namespace invgen

#endif
