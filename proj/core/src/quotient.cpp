#include "invgen/quotient.hpp"

#include "invgen/errors.hpp"

namespace invgen {

Quotient make_quotient(PermGroupPtr G, const Bitset &N, uint64_t order_cap) {
  const uint32_t n = uint32_t(G->order());
  if (N.size() != n || !N.test(G->identity_id()))
    throw Error(ErrorKind::NotNormal, "kernel is not a subgroup id-set of the parent");

  auto ngens = small_generating_set(*G, N);
  if (G->closure_ids(ngens).count() != N.count())
    throw Error(ErrorKind::NotNormal, "kernel id-set is not closed under multiplication");
  for (uint32_t u : ngens)
    for (uint32_t g : G->generator_ids())
      if (!N.test(G->conj(u, g)))
        throw Error(ErrorKind::NotNormal, "subgroup is not normal in the parent");

  // Right cosets, enumerated by ascending least member so point numbering is
  // canonical.
  Quotient q;
  q.parent = G;
  q.kernel = N;
  q.coset_of.assign(n, UINT32_MAX);
  std::vector<uint32_t> reps;
  auto nmembers = N.members();
  for (uint32_t x = 0; x < n; ++x) {
    if (q.coset_of[x] != UINT32_MAX) continue;
    uint32_t pt = uint32_t(reps.size());
    reps.push_back(x);
    for (uint32_t u : nmembers) q.coset_of[G->mul(u, x)] = pt;
  }

  const uint32_t index = uint32_t(reps.size());
  auto action_of = [&](uint32_t elem) {
    std::vector<uint32_t> img(index);
    for (uint32_t c = 0; c < index; ++c) img[c] = q.coset_of[G->mul(reps[c], elem)];
    return Permutation(std::move(img));
  };

  std::vector<Permutation> qgens;
  qgens.reserve(G->generators().size());
  for (uint32_t g : G->generator_ids()) qgens.push_back(action_of(g));
  q.group = PermGroup::from_generators(qgens, order_cap);
  if (q.group->order() != index)
    throw Error(ErrorKind::Internal, "coset action order mismatch");

  q.push_elem.resize(n);
  for (uint32_t x = 0; x < n; ++x) q.push_elem[x] = q.group->id_of(action_of(x));
  return q;
}

} // namespace invgen
