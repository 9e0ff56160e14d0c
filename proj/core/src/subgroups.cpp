#include "invgen/subgroups.hpp"

#include <algorithm>
#include <unordered_map>

#include "invgen/errors.hpp"

namespace invgen {

namespace {

struct IdVecHash {
  std::size_t operator()(const std::vector<uint32_t> &v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }
};

struct Candidate {
  Bitset elems;
  std::vector<uint32_t> gen_ids;
};

std::vector<uint32_t> sorted_members(const Bitset &b) { return b.members(); }

} // namespace

const SubgroupClassTable &subgroup_class_table(const PermGroup &G, uint64_t subgroup_cap) {
  {
    std::lock_guard<std::mutex> lock(G.subgroup_mutex);
    if (G.subgroup_cache) return *G.subgroup_cache;
  }
  if (G.order() > subgroup_cap)
    throw Error(ErrorKind::SubgroupCapExceeded,
                "subgroup enumeration capped at order " + std::to_string(subgroup_cap) +
                    ", group has order " + std::to_string(G.order()));
  if (!derived_data(G).is_soluble)
    throw Error(ErrorKind::NotSoluble, "subgroup enumeration requires a soluble group");
  G.ensure_cayley();

  const uint32_t n = uint32_t(G.order());
  auto table = std::make_shared<SubgroupClassTable>();
  table->group_order = n;

  std::vector<Candidate> classes;
  std::vector<std::vector<std::vector<uint32_t>>> orbits; // per class: conjugate id-vectors
  std::unordered_map<std::vector<uint32_t>, uint32_t, IdVecHash> known;

  auto register_class = [&](Candidate cand) -> bool {
    auto key = sorted_members(cand.elems);
    if (known.count(key)) return false;
    uint32_t cid = uint32_t(classes.size());
    // Conjugate orbit under the group generators.
    std::vector<std::vector<uint32_t>> orbit{key};
    known.emplace(std::move(key), cid);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      auto cur = orbit[head];
      for (uint32_t g : G.generator_ids()) {
        std::vector<uint32_t> img;
        img.reserve(cur.size());
        for (uint32_t x : cur) img.push_back(G.conj(x, g));
        std::sort(img.begin(), img.end());
        if (!known.count(img)) {
          known.emplace(img, cid);
          orbit.push_back(std::move(img));
        }
      }
    }
    orbits.push_back(std::move(orbit));
    classes.push_back(std::move(cand));
    return true;
  };

  {
    Candidate trivial;
    trivial.elems = Bitset(n);
    trivial.elems.set(G.identity_id());
    register_class(std::move(trivial));
  }

  for (std::size_t next = 0; next < classes.size(); ++next) {
    // Copies: register_class may reallocate `classes`.
    const Bitset U = classes[next].elems;
    const std::vector<uint32_t> ugens = classes[next].gen_ids;
    const uint64_t usize = U.count();

    // Normalizer scan: g normalizes U iff it conjugates U's generators into U.
    std::vector<uint32_t> normalizer;
    for (uint32_t g = 0; g < n; ++g) {
      bool ok = true;
      for (uint32_t u : ugens)
        if (!U.test(G.conj(u, g))) {
          ok = false;
          break;
        }
      if (ok) normalizer.push_back(g);
    }

    // One candidate per coset of U in N(U); extensions of prime coset order
    // close as the union of p cosets, no BFS needed.
    Bitset coset_seen(n);
    for (uint32_t g : normalizer) {
      if (coset_seen.test(g)) continue;
      std::vector<uint32_t> coset;
      coset.reserve(usize);
      for (std::size_t u = 0; u < n; ++u)
        if (U.test(u)) {
          uint32_t y = G.mul(uint32_t(u), g);
          coset_seen.set(y);
          coset.push_back(y);
        }
      if (U.test(g)) continue;
      uint64_t m = 1;
      uint32_t pw = g;
      while (!U.test(pw)) {
        pw = G.mul(pw, g);
        ++m;
      }
      // m = order of the coset Ug in N(U)/U
      bool m_prime = m >= 2;
      for (uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
          m_prime = false;
          break;
        }
      if (!m_prime) continue;
      Candidate ext;
      ext.elems = U;
      for (uint32_t y : coset) ext.elems.set(y);
      uint32_t gp = g;
      for (uint64_t j = 2; j < m; ++j) {
        gp = G.mul(gp, g);
        for (std::size_t u = 0; u < n; ++u)
          if (U.test(u)) ext.elems.set(G.mul(uint32_t(u), gp));
      }
      ext.gen_ids = ugens;
      ext.gen_ids.push_back(g);
      register_class(std::move(ext));
    }
  }

  // Canonical class order: by order, then orbit length, then least member set.
  std::vector<uint32_t> idx(classes.size());
  for (uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
    uint64_t oa = classes[a].elems.count(), ob = classes[b].elems.count();
    if (oa != ob) return oa < ob;
    if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
    return *std::min_element(orbits[a].begin(), orbits[a].end()) <
           *std::min_element(orbits[b].begin(), orbits[b].end());
  });

  std::vector<std::vector<std::vector<uint32_t>>> sorted_orbits;
  for (uint32_t i : idx) {
    SubgroupClass sc;
    sc.elems = classes[i].elems;
    sc.gen_ids = small_generating_set(G, sc.elems);
    sc.order = sc.elems.count();
    sc.conjugate_count = uint32_t(orbits[i].size());
    sc.is_normal = sc.conjugate_count == 1;
    sc.is_maximal = false;
    table->classes.push_back(std::move(sc));
    sorted_orbits.push_back(orbits[i]);
  }

  // Maximality: no proper class strictly contains a conjugate.
  const std::size_t k = table->classes.size();
  for (std::size_t a = 0; a < k; ++a) {
    auto &A = table->classes[a];
    if (A.order == n) continue;
    bool contained = false;
    for (std::size_t b = 0; b < k && !contained; ++b) {
      const auto &B = table->classes[b];
      if (B.order == n || B.order <= A.order || B.order % A.order != 0) continue;
      for (const auto &conj_ids : sorted_orbits[a]) {
        bool subset = true;
        for (uint32_t x : conj_ids)
          if (!B.elems.test(x)) {
            subset = false;
            break;
          }
        if (subset) {
          contained = true;
          break;
        }
      }
    }
    A.is_maximal = !contained;
  }

  // Frattini subgroup and per-maximal-class conjugate unions.
  Bitset frat(n);
  for (uint32_t i = 0; i < n; ++i) frat.set(i);
  for (uint32_t a = 0; a < k; ++a) {
    if (!table->classes[a].is_maximal) continue;
    table->maximal_ids.push_back(a);
    Bitset uni(n);
    for (const auto &conj_ids : sorted_orbits[a]) {
      Bitset conj_set(n);
      for (uint32_t x : conj_ids) conj_set.set(x);
      uni |= conj_set;
      frat &= conj_set;
    }
    table->maximal_conjugate_union.push_back(std::move(uni));
  }
  if (table->maximal_ids.empty()) {
    // Trivial group: Frattini is the whole (trivial) group.
    frat = Bitset(n);
    frat.set(G.identity_id());
  }
  table->frattini = frat;
  table->frattini_gens = small_generating_set(G, frat);

  std::lock_guard<std::mutex> lock(G.subgroup_mutex);
  if (!G.subgroup_cache) G.subgroup_cache = table;
  return *G.subgroup_cache;
}

} // namespace invgen
