#ifndef INVGEN_LIFTING_HPP
#define INVGEN_LIFTING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invgen/gen_analysis.hpp"
#include "invgen/structured.hpp"

namespace invgen {

constexpr uint64_t kDefaultWitnessBudget = 5000;

/// Sum over the given elements of dim_{End_G(V)} C_V(g_i), the right-hand
/// side of the lifting criterion for V^u x| G. Requires the elements'
/// classes to invariably generate G and V irreducible.
uint64_t lifting_bound(const GModule &V, const std::vector<uint32_t> &gen_ids,
                       uint64_t subgroup_cap = kDefaultSubgroupCap);

/// Effective "if" direction: searches for w_1..w_d in V^u making the g_i w_i
/// invariably generate the materialized V^u x| G. Enumerates per-position
/// conjugacy classes of the extension rather than raw vectors, verifies the
/// winning choice with invariably_generates, and returns the vectors.
std::optional<std::vector<std::vector<uint32_t>>>
find_lifting_witness(const GModule &V, uint32_t u, const std::vector<uint32_t> &gen_ids,
                     uint64_t order_budget = kDefaultWitnessBudget,
                     uint64_t subgroup_cap = kDefaultSubgroupCap);

/// Per-component audit row of a structured lower-bound certificate.
struct ObstructionRow {
  std::vector<uint32_t> class_ids; // invariably generating multiset of the top
  int component = -1;              // obstructing socle component, -1 if none
  uint64_t needed = 0;             // multiplicity target of that component
  uint64_t available = 0;          // sum of dim_End fixed spaces
};

struct StructuredBound {
  bool certified = false; // true certifies d_I(S) > r
  uint32_t r = 0;
  std::vector<ObstructionRow> rows;
  std::string note;
};

/// Certifies d_I(S) > r by obstructing every size-r invariably generating
/// class multiset of the top group (identity class included) against some
/// socle component via the lifting criterion. Never materializes S.
StructuredBound structured_dI_lower_bound(const StructuredGroup &S, uint32_t r,
                                          uint64_t subgroup_cap = kDefaultSubgroupCap);

/// d_I(S) <= d_I(top) + d_G(socle): the recursion step behind the
/// l(d-1)+1 upper bound, evaluated structurally.
uint32_t structured_dI_upper_bound(const StructuredGroup &S,
                                   uint64_t subgroup_cap = kDefaultSubgroupCap);

/// Constructive l(d-1)+1 bound: invariable generators built by recursion on
/// the derived series (module generators of the last term + lifts from the
/// quotient), verified before returning.
std::vector<uint32_t> prop_le_construct(PermGroupPtr G,
                                        uint64_t subgroup_cap = kDefaultSubgroupCap,
                                        uint64_t order_cap = PermGroup::kDefaultOrderCap);

struct DichotomyReport {
  uint64_t min_prime = 0;
  uint32_t d = 0;
  uint32_t d_I = 0;
  bool first_horn = false; // d_I(G) >= min pi(G)
  // Second horn data: H = C_q wr G with certified d_I(H) > d_I(G).
  uint64_t q = 0;
  std::string h_expr;
  uint32_t h_d = 0;
  StructuredBound certificate;
  /// Per minimal invariable generating multiset: the proof's sum of 1/|g_i|
  /// as an exact fraction.
  struct Diagnostic {
    std::vector<uint32_t> class_ids;
    uint64_t num = 0, den = 1;
    bool at_least_one; // num/den >= 1
  };
  std::vector<Diagnostic> diagnostics;
};

/// Dichotomy check for 2-generated soluble groups: either
/// d_I(G) >= min pi(G), or H = C_q wr G strictly increases d_I.
DichotomyReport two_gen_dichotomy_check(PermGroupPtr G,
                                        uint64_t subgroup_cap = kDefaultSubgroupCap);

} // namespace invgen

#endif
