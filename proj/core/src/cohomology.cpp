#include "invgen/cohomology.hpp"

#include "invgen/errors.hpp"

namespace invgen {

uint32_t h1_dim(const GModule &V, uint64_t cohomology_cap) {
  const PermGroup &G = *V.group;
  if (G.order() > cohomology_cap)
    throw Error(ErrorKind::CohomologyCapExceeded,
                "first cohomology capped at order " + std::to_string(cohomology_cap));
  const uint32_t n = uint32_t(G.order());
  const uint32_t d = V.dim;
  const uint32_t unknowns = n * d; // f(x)_t, indexed x*d + t
  PrimeField F{V.q};
  auto mats = V.all_matrices();

  RowSpace constraints(V.q, unknowns);
  std::vector<uint32_t> row(unknowns);
  for (uint32_t g = 0; g < n; ++g) {
    for (uint32_t h = 0; h < n; ++h) {
      uint32_t gh = G.mul(g, h);
      const MatFp &rho_h = mats[h];
      // f(gh) - f(g) rho(h) - f(h) = 0, one scalar row per coordinate t.
      for (uint32_t t = 0; t < d; ++t) {
        std::fill(row.begin(), row.end(), 0);
        row[gh * d + t] = F.add(row[gh * d + t], 1);
        for (uint32_t s = 0; s < d; ++s)
          row[g * d + s] = F.sub(row[g * d + s], rho_h.at(s, t));
        row[h * d + t] = F.sub(row[h * d + t], 1);
        constraints.insert(row);
        if (constraints.dim() == unknowns) break;
      }
    }
  }
  uint32_t z1 = unknowns - constraints.dim();
  uint32_t b1 = d - global_fixed_space(V).dim;
  if (z1 < b1) throw Error(ErrorKind::Internal, "B1 exceeds Z1");
  return z1 - b1;
}

} // namespace invgen
