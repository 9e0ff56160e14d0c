#ifndef INVGEN_MEATAXE_HPP
#define INVGEN_MEATAXE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "invgen/gmodule.hpp"

namespace invgen {

struct IrredComponent {
  GModule module;      // the irreducible, in its own coordinates
  uint32_t multiplicity;
  MatFp basis;         // multiplicity * dim rows in the coordinates of the input
  uint32_t endo_dim;   // dim_F End_G(module)
};

struct IrredDecomposition {
  std::vector<IrredComponent> components; // pairwise non-isomorphic
  MatFp change_of_basis;                  // stacked bases; conjugation shows blocks

  uint32_t total_dim() const {
    uint32_t d = 0;
    for (const auto &c : components) d += c.multiplicity * c.module.dim;
    return d;
  }
};

/// Holt-Rees meataxe split search: random algebra elements, minimal
/// polynomial factors, nullspace spinning, Norton's criterion to certify
/// irreducibility. Requires char(F) coprime to |G| (semisimple setting).
/// Returns a proper submodule basis, or nullopt with *proven = true.
std::optional<RowSpace> find_proper_submodule(const GModule &M, std::mt19937_64 &rng,
                                              bool *proven_irreducible,
                                              int budget = 200);

bool is_irreducible(const GModule &M, std::mt19937_64 &rng, int budget = 200);

/// Complete decomposition into irreducibles grouped by isomorphism type,
/// deterministic given the seed. Complements come from averaging a projection
/// over the group (Maschke), so the result is a true direct sum with bases.
IrredDecomposition meataxe_decompose(const GModule &M, uint64_t seed);

/// Basis of Hom_G(V, W) (matrices X with rho_V(g) X = X rho_W(g)).
std::vector<MatFp> intertwiner_space(const GModule &V, const GModule &W);

/// dim_F End_G(V); requires V irreducible.
uint32_t endo_dim(const GModule &V);

/// r_G(V) = dim_{End_G(V)} V = dim V / endo_dim(V); requires V irreducible.
uint32_t r_G(const GModule &V);

/// True iff an invertible intertwiner exists; for irreducibles any nonzero
/// one already is invertible (Schur).
bool modules_isomorphic(const GModule &V, const GModule &W, uint64_t seed = 7);

} // namespace invgen

#endif
