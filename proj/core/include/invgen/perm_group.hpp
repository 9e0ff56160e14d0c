#ifndef INVGEN_PERM_GROUP_HPP
#define INVGEN_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "invgen/bigint.hpp"
#include "invgen/bitset.hpp"
#include "invgen/perm.hpp"

namespace invgen {

class PermGroup;
using PermGroupPtr = std::shared_ptr<const PermGroup>;

struct ConjugacyClass {
  uint32_t rep;                     // id of the lexicographically least member
  std::vector<uint32_t> member_ids; // ascending
  uint64_t element_order;

  uint64_t size() const { return member_ids.size(); }
};

struct SubgroupClassTable; // subgroups.hpp
struct IncidenceTable;     // gen_analysis.hpp

/// Concrete finite group: generators plus the fully materialized element set.
///
/// Element ids index the lexicographically sorted element list, so ids, class
/// ids and everything derived from them are deterministic across runs.
/// Instances are immutable after construction; the lazy caches (classes,
/// multiplication table, subgroup table) are mutex-guarded, so sharing one
/// group across threads is safe.
class PermGroup : public std::enable_shared_from_this<PermGroup> {
public:
  static constexpr uint64_t kDefaultOrderCap = 20000;
  static constexpr uint64_t kCayleyLimit = 8192; // id x id table memory guard

  static PermGroupPtr from_generators(std::vector<Permutation> gens,
                                      uint64_t order_cap = kDefaultOrderCap);

  uint32_t degree() const { return degree_; }
  uint64_t order() const { return elements_.size(); }
  uint64_t exponent() const { return exponent_; }

  const std::vector<Permutation> &generators() const { return gens_; }
  const std::vector<uint32_t> &generator_ids() const { return gen_ids_; }

  const Permutation &element(uint32_t id) const { return elements_[id]; }
  uint32_t identity_id() const { return identity_; }
  std::optional<uint32_t> find(const Permutation &p) const;
  uint32_t id_of(const Permutation &p) const; // throws ElementNotInGroup

  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const { return inverse_[a]; }
  uint32_t conj(uint32_t x, uint32_t g) const { return mul(mul(inverse_[g], x), g); }
  uint32_t power(uint32_t a, uint64_t e) const;
  uint64_t element_order(uint32_t id) const { return elem_order_[id]; }

  /// BFS spanning data: words[id] = (parent id, generator index), with the
  /// identity as its own parent. Lets modules evaluate an action on arbitrary
  /// elements by composing generator matrices.
  const std::vector<std::pair<uint32_t, uint32_t>> &bfs_words() const { return words_; }

  const std::vector<ConjugacyClass> &conjugacy_classes() const;
  uint32_t class_of(uint32_t id) const;

  /// Subgroup generated by the given element ids, as an id bitset.
  Bitset closure_ids(const std::vector<uint32_t> &sub_gens) const;

  bool has_cayley() const;
  void ensure_cayley() const; // throws OrderCapExceeded above kCayleyLimit

  const Factorization &order_factorization() const { return order_fact_; }
  uint64_t min_prime() const { return smallest_prime_divisor(order_fact_); }

  // Cached by the free function subgroup_class_table() in subgroups.hpp.
  mutable std::shared_ptr<const SubgroupClassTable> subgroup_cache;
  mutable std::mutex subgroup_mutex;
  // Cached by incidence_table() in gen_analysis.hpp.
  mutable std::shared_ptr<const IncidenceTable> incidence_cache;
  mutable std::mutex incidence_mutex;

private:
  PermGroup() = default;

  uint32_t degree_ = 1;
  std::vector<Permutation> gens_;
  std::vector<uint32_t> gen_ids_;
  std::vector<Permutation> elements_; // sorted lexicographically
  std::unordered_map<Permutation, uint32_t, PermHash> index_;
  uint32_t identity_ = 0;
  std::vector<uint32_t> inverse_;
  std::vector<uint64_t> elem_order_;
  std::vector<std::pair<uint32_t, uint32_t>> words_;
  std::vector<std::vector<uint32_t>> rmul_gen_; // per generator: id -> id*gen
  uint64_t exponent_ = 1;
  Factorization order_fact_;

  mutable std::mutex cache_mutex_;
  mutable std::vector<ConjugacyClass> classes_;
  mutable std::vector<uint32_t> class_of_;
  mutable std::vector<uint32_t> cayley_; // row-major order x order, empty if absent
};

/// Full derived series G > G' > G'' > ... with solubility verdict.
struct DerivedData {
  std::vector<Bitset> series; // series[0] = G, strictly descending
  uint32_t derived_length;
  bool is_soluble;
};

DerivedData derived_data(const PermGroup &G);

/// Commutator subgroup of the subgroup H (id set), as a subgroup of G.
Bitset commutator_subgroup(const PermGroup &G, const Bitset &H);

/// Greedy generating set for a subgroup given as an id set.
std::vector<uint32_t> small_generating_set(const PermGroup &G, const Bitset &H);

/// Subgroup generated by `seeds` and closed under conjugation by `conjugators`.
Bitset normal_closure_in(const PermGroup &G, const std::vector<uint32_t> &seeds,
                         const std::vector<uint32_t> &conjugators);

bool is_abelian(const PermGroup &G);
bool is_nilpotent(const PermGroup &G);

} // namespace invgen

#endif
