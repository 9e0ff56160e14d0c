#ifndef INVGEN_GEN_ANALYSIS_HPP
#define INVGEN_GEN_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "invgen/perm_group.hpp"
#include "invgen/subgroups.hpp"

namespace invgen {

// ---------------------------------------------------------------------------
// Ordinary generation

bool generates_ids(const PermGroup &G, const std::vector<uint32_t> &ids);
bool generates(const PermGroup &G, const std::vector<Permutation> &S);

struct MinGenerators {
  uint32_t d = 0;
  std::vector<uint32_t> witness_ids; // a generating tuple of size d
};

/// Exact d(G) by ascending search; the first tuple entry only ranges over
/// class representatives (simultaneous conjugation keeps generation).
MinGenerators d_min_generators(const PermGroup &G);

// ---------------------------------------------------------------------------
// Invariable generation

/// A set of classes invariably generates iff no maximal subgroup class has
/// its conjugate union meeting every chosen class. meets[c][m] records
/// whether class c intersects the union of conjugates of maximal class m.
struct IncidenceTable {
  std::vector<std::vector<bool>> meets; // [class][maximal index]
  std::vector<uint32_t> maximal_ids;    // subgroup-table class indices
};

const IncidenceTable &incidence_table(const PermGroup &G,
                                      uint64_t subgroup_cap = kDefaultSubgroupCap);

struct InvGenCertificate {
  enum class Kind { Witness, Refutation, DIExact, DILowerBound };
  Kind kind = Kind::Witness;
  std::vector<uint32_t> class_ids; // chosen conjugacy classes
  /// Witness / DIExact: for the i-th maximal class, index into class_ids of a
  /// class disjoint from its conjugate union.
  std::vector<uint32_t> per_maximal_choice;
  /// Refutation: maximal index (into incidence maximal_ids) met by all.
  uint32_t blocking_maximal = UINT32_MAX;
  uint32_t value = 0; // d_I for DIExact, r for DILowerBound
  std::string note;
};

struct InvGenResult {
  bool ok = false;
  InvGenCertificate cert;
};

/// Decision via maximal subgroup classes; produces a one-pass-checkable
/// certificate either way.
InvGenResult invariably_generates(const PermGroup &G,
                                  const std::vector<uint32_t> &class_ids,
                                  uint64_t subgroup_cap = kDefaultSubgroupCap);

/// Re-verifies a witness/refutation certificate from raw group data only.
bool verify_invgen_certificate(const PermGroup &G, const InvGenCertificate &cert,
                               bool expected_ok,
                               uint64_t subgroup_cap = kDefaultSubgroupCap);

struct BruteBudget {
  uint64_t max_order = 200;
  uint32_t max_set = 3;
};

/// Definitional oracle: every tuple of per-element conjugate choices must
/// generate. Kept independent of the maximal-subgroup route.
bool invariably_generates_bruteforce(const PermGroup &G,
                                     const std::vector<uint32_t> &elem_ids,
                                     const BruteBudget &budget = {});

struct DIResult {
  uint32_t value = 0;
  InvGenCertificate cert;
};

/// Exact d_I(G): least r with an invariably generating multiset of r
/// nontrivial classes, searched in canonical order ascending from d(G).
DIResult compute_d_I(const PermGroup &G, uint64_t subgroup_cap = kDefaultSubgroupCap);

/// All invariably generating multisets of exactly r nontrivial classes.
std::vector<std::vector<uint32_t>> invgen_multisets(const PermGroup &G, uint32_t r,
                                                    bool include_identity,
                                                    uint64_t subgroup_cap = kDefaultSubgroupCap);

} // namespace invgen

#endif
