#ifndef INVGEN_STRUCTURED_HPP
#define INVGEN_STRUCTURED_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "invgen/bigint.hpp"
#include "invgen/gmodule.hpp"
#include "invgen/module_counts.hpp"

namespace invgen {

class StructuredGroup;
using StructuredGroupPtr = std::shared_ptr<const StructuredGroup>;

/// One isomorphism type of complemented chief factor, with the counts the
/// Gaschutz formula needs.
struct ChiefAnnotation {
  uint64_t prime = 2;
  uint32_t dim = 1;
  bool trivial_action = true; // theta_G(V) = 0 iff trivial
  uint32_t delta = 0;         // complemented factors of this type
  uint32_t r = 1;             // dim over End_G(V)
  std::optional<GModule> module; // over the owner's top group, when comparable
};

struct SocleSummand {
  GModule module; // over the materialized top group
  uint32_t multiplicity;
};

/// A finite extension (socle) x| (top), analyzed without materializing its
/// element set when the order is out of reach. Leaves are concrete groups.
class StructuredGroup : public std::enable_shared_from_this<StructuredGroup> {
public:
  static StructuredGroupPtr make_leaf(PermGroupPtr G, std::string expr);
  /// d_formula / derived_length are recorded when a construction knows them
  /// (wreath d from the coprime formula, tower dl from the level count).
  static StructuredGroupPtr make_extension(std::vector<SocleSummand> socle_raw,
                                           StructuredGroupPtr top, std::string expr,
                                           uint64_t meataxe_seed = 0x5EED,
                                           std::optional<uint32_t> d_formula = {},
                                           std::optional<uint32_t> derived_length = {});
  static StructuredGroupPtr direct_product(const std::vector<StructuredGroupPtr> &parts,
                                           std::string expr, uint64_t order_cap);

  bool is_leaf() const { return leaf_ != nullptr; }
  const PermGroupPtr &leaf() const { return leaf_; }
  const StructuredGroupPtr &top() const { return top_; }

  /// Raw socle as built (modules may be reducible); empty for leaves.
  const std::vector<SocleSummand> &socle_raw() const { return socle_raw_; }
  /// Socle split into pairwise non-isomorphic irreducibles.
  const std::vector<SocleSummand> &socle_irreducible() const { return socle_irr_; }

  ModuleSum socle_module_sum() const;

  /// Materialized top group (the acting group of the socle).
  PermGroupPtr top_group() const;

  const std::string &expr() const { return expr_; }
  const Factorization &order_factorization() const { return order_fact_; }
  BigUint order() const { return factored_value(order_fact_); }
  uint64_t min_prime() const { return smallest_prime_divisor(order_fact_); }
  bool soluble() const { return soluble_; }
  std::optional<uint32_t> derived_length() const { return derived_length_; }
  std::optional<uint32_t> d_formula() const { return d_formula_; }

  const std::vector<ChiefAnnotation> &annotation() const { return annotation_; }
  bool annotation_complete() const { return annotation_complete_; }
  bool supersoluble_by_annotation() const;

  bool materializable(uint64_t order_cap) const;

  struct Materialized {
    PermGroupPtr group;
    PermGroupPtr top;                    // acting group; equals group for leaves
    std::vector<uint32_t> project_top;   // element id -> top element id
    std::vector<SocleSummand> socle;     // raw summands, block layout order
    uint32_t socle_points = 0;
    std::vector<uint32_t> block_offset;  // per (summand, copy) flattened
    std::vector<uint32_t> block_summand; // summand index per block

    /// Element (w, g): per block a vector of the summand's dimension.
    Permutation element_perm(const std::vector<std::vector<uint32_t>> &w,
                             uint32_t top_id,
                             const std::vector<MatFp> &rho_per_summand) const;
    std::vector<MatFp> rho_of(uint32_t top_id) const; // one matrix per summand
  };

  const Materialized &materialize(uint64_t order_cap = PermGroup::kDefaultOrderCap) const;

private:
  StructuredGroup() = default;

  PermGroupPtr leaf_;
  std::vector<SocleSummand> socle_raw_, socle_irr_;
  StructuredGroupPtr top_;
  std::string expr_;
  Factorization order_fact_;
  bool soluble_ = true;
  std::optional<uint32_t> derived_length_;
  std::optional<uint32_t> d_formula_;
  std::vector<ChiefAnnotation> annotation_;
  bool annotation_complete_ = false;

  mutable std::mutex mat_mutex_;
  mutable std::shared_ptr<Materialized> mat_;
};

/// d(G) by the Gaschutz formula over the complemented chief annotation.
uint32_t gaschutz_d(const StructuredGroup &S);

} // namespace invgen

#endif
