#ifndef INVGEN_SERIALIZE_HPP
#define INVGEN_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "invgen/gen_analysis.hpp"
#include "invgen/lifting.hpp"
#include "invgen/meataxe.hpp"

namespace invgen {

using json = nlohmann::json;

/// Matrices serialize row-major with the field modulus in the header.
json matrix_json(const MatFp &M);

/// Schema "invgen-cert/1": group expression, class fingerprints and
/// per-maximal-class evidence, re-checkable from raw group data.
json certificate_json(const PermGroup &G, const std::string &expr,
                      const InvGenCertificate &cert, bool holds);

/// Re-verifies an "invgen-cert/1" document against a freshly analyzed group.
bool recheck_certificate(const PermGroup &G, const json &doc,
                         uint64_t subgroup_cap = kDefaultSubgroupCap);

/// Schema "decomp/1".
json decomposition_json(const std::string &expr, uint32_t q, const IrredDecomposition &dec);

/// Schema "lift/1": the obstruction table of a structured lower bound.
json structured_bound_json(const StructuredGroup &S, const StructuredBound &b);

/// Schema "dichotomy/1".
json dichotomy_json(const std::string &expr, const DichotomyReport &rep);

} // namespace invgen

#endif
