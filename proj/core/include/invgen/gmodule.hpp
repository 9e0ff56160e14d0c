#ifndef INVGEN_GMODULE_HPP
#define INVGEN_GMODULE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "invgen/matrix.hpp"
#include "invgen/perm_group.hpp"

namespace invgen {

/// Linear right action of a group on F_q^dim: one invertible matrix per group
/// generator, vectors acting as rows (v -> v * rho(g), matching v^g).
struct GModule {
  PermGroupPtr group;
  uint32_t q = 2;
  uint32_t dim = 0;
  std::vector<MatFp> gen_action; // aligned with group->generators()

  /// Action matrix of an arbitrary element, composed along its BFS word.
  MatFp matrix_of(uint32_t elem_id) const;

  /// Action matrices for every element, one multiply each along the BFS tree.
  std::vector<MatFp> all_matrices() const;

  /// Spot-checks the homomorphism property on random products.
  bool verify_action(std::mt19937_64 &rng, int trials = 16) const;

  Bitset kernel_ids() const; // C_G(V)
  bool is_faithful() const { return kernel_ids().count() == 1; }
  bool is_trivial_action() const;
};

GModule make_module(PermGroupPtr G, uint32_t q, std::vector<MatFp> gen_action);

/// F_qG: generators permute the element basis by right translation.
GModule regular_module(PermGroupPtr G, uint32_t q,
                       uint64_t order_cap = PermGroup::kDefaultOrderCap);

GModule trivial_module(PermGroupPtr G, uint32_t q);

/// Direct sum of u diagonal copies.
GModule module_power(const GModule &V, uint32_t u);

struct FixedSpace {
  uint32_t dim;
  MatFp basis; // rows, RREF
};

/// C_V(g): nullspace of rho(g) - 1; a class function in its dimension.
FixedSpace fixed_space(const GModule &V, uint32_t elem_id);
FixedSpace fixed_space(const GModule &V, const Permutation &g);

/// Fixed space of the whole group, C_V(G).
FixedSpace global_fixed_space(const GModule &V);

/// (measured, predicted) = (dim C_{F_qG}(g), |G| / |g|); the two must agree.
std::pair<uint32_t, uint32_t> centralizer_dim_check(const PermGroup &G, uint32_t q,
                                                    uint32_t elem_id);

/// Smallest submodule containing the given row vectors, as an RREF basis.
RowSpace spin(const GModule &M, const std::vector<std::vector<uint32_t>> &seeds);

/// Restriction of the action to an invariant subspace given by an RREF basis.
GModule submodule_action(const GModule &M, const RowSpace &W);

} // namespace invgen

#endif
