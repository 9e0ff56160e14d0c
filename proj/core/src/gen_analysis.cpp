#include "invgen/gen_analysis.hpp"

#include <algorithm>

#include "invgen/errors.hpp"

namespace invgen {

bool generates_ids(const PermGroup &G, const std::vector<uint32_t> &ids) {
  return G.closure_ids(ids).count() == G.order();
}

bool generates(const PermGroup &G, const std::vector<Permutation> &S) {
  std::vector<uint32_t> ids;
  ids.reserve(S.size());
  for (const auto &p : S) ids.push_back(G.id_of(p));
  return generates_ids(G, ids);
}

namespace {

// Class iteration order for generator searches: long element orders first.
std::vector<uint32_t> classes_by_descending_order(const PermGroup &G) {
  const auto &cls = G.conjugacy_classes();
  std::vector<uint32_t> idx(cls.size());
  for (uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
    if (cls[a].element_order != cls[b].element_order)
      return cls[a].element_order > cls[b].element_order;
    return a < b;
  });
  return idx;
}

bool extend_generating_tuple(const PermGroup &G, std::vector<uint32_t> &tuple,
                             uint32_t remaining, uint32_t min_id,
                             const std::vector<uint32_t> &by_order) {
  if (remaining == 0) return generates_ids(G, tuple);
  if (tuple.size() == 0) {
    const auto &cls = G.conjugacy_classes();
    for (uint32_t ci : by_order) {
      tuple.push_back(cls[ci].rep);
      if (extend_generating_tuple(G, tuple, remaining - 1, 0, by_order)) return true;
      tuple.pop_back();
    }
    return false;
  }
  for (uint32_t y = min_id; y < G.order(); ++y) {
    tuple.push_back(y);
    if (extend_generating_tuple(G, tuple, remaining - 1, y, by_order)) return true;
    tuple.pop_back();
  }
  return false;
}

} // namespace

MinGenerators d_min_generators(const PermGroup &G) {
  MinGenerators res;
  if (G.order() == 1) return res; // d(1) = 0
  if (G.order() <= PermGroup::kCayleyLimit) G.ensure_cayley();
  // Cyclic?
  for (uint32_t x = 0; x < G.order(); ++x)
    if (G.element_order(x) == G.order()) {
      res.d = 1;
      res.witness_ids = {x};
      return res;
    }
  auto by_order = classes_by_descending_order(G);
  for (uint32_t r = 2;; ++r) {
    std::vector<uint32_t> tuple;
    if (extend_generating_tuple(G, tuple, r, 0, by_order)) {
      res.d = r;
      res.witness_ids = tuple;
      return res;
    }
  }
}

const IncidenceTable &incidence_table(const PermGroup &G, uint64_t subgroup_cap) {
  {
    std::lock_guard<std::mutex> lock(G.incidence_mutex);
    if (G.incidence_cache) return *G.incidence_cache;
  }
  const auto &table = subgroup_class_table(G, subgroup_cap);
  const auto &classes = G.conjugacy_classes();
  auto inc = std::make_shared<IncidenceTable>();
  inc->maximal_ids = table.maximal_ids;
  inc->meets.assign(classes.size(), std::vector<bool>(table.maximal_ids.size(), false));
  for (std::size_t m = 0; m < table.maximal_ids.size(); ++m) {
    const Bitset &uni = table.maximal_conjugate_union[m];
    // Conjugate unions are class-stable, so testing the representative decides
    // the whole class.
    for (std::size_t c = 0; c < classes.size(); ++c)
      inc->meets[c][m] = uni.test(classes[c].rep);
  }
  std::lock_guard<std::mutex> lock(G.incidence_mutex);
  if (!G.incidence_cache) G.incidence_cache = inc;
  return *G.incidence_cache;
}

namespace {

/// Checks the covering criterion for a multiset of class ids; fills the
/// per-maximal choices or the blocking maximal.
bool check_multiset(const IncidenceTable &inc, const std::vector<uint32_t> &class_ids,
                    std::vector<uint32_t> *choices, uint32_t *blocking) {
  const std::size_t n_max = inc.maximal_ids.size();
  if (choices) choices->assign(n_max, UINT32_MAX);
  for (std::size_t m = 0; m < n_max; ++m) {
    bool avoided = false;
    for (std::size_t i = 0; i < class_ids.size(); ++i)
      if (!inc.meets[class_ids[i]][m]) {
        if (choices) (*choices)[m] = uint32_t(i);
        avoided = true;
        break;
      }
    if (!avoided) {
      if (blocking) *blocking = uint32_t(m);
      return false;
    }
  }
  return true;
}

} // namespace

InvGenResult invariably_generates(const PermGroup &G,
                                  const std::vector<uint32_t> &class_ids,
                                  uint64_t subgroup_cap) {
  const auto &inc = incidence_table(G, subgroup_cap);
  InvGenResult res;
  res.cert.class_ids = class_ids;
  uint32_t blocking = UINT32_MAX;
  std::vector<uint32_t> choices;
  res.ok = check_multiset(inc, class_ids, &choices, &blocking);
  if (res.ok) {
    res.cert.kind = InvGenCertificate::Kind::Witness;
    res.cert.per_maximal_choice = std::move(choices);
  } else {
    res.cert.kind = InvGenCertificate::Kind::Refutation;
    res.cert.blocking_maximal = blocking;
  }
  return res;
}

bool verify_invgen_certificate(const PermGroup &G, const InvGenCertificate &cert,
                               bool expected_ok, uint64_t subgroup_cap) {
  // One pass over raw data: rebuild the conjugate unions and check the
  // recorded evidence directly, without trusting the cached incidence.
  const auto &table = subgroup_class_table(G, subgroup_cap);
  const auto &classes = G.conjugacy_classes();
  for (uint32_t c : cert.class_ids)
    if (c >= classes.size()) return false;
  if (expected_ok) {
    if (cert.per_maximal_choice.size() != table.maximal_ids.size()) return false;
    for (std::size_t m = 0; m < table.maximal_ids.size(); ++m) {
      uint32_t pick = cert.per_maximal_choice[m];
      if (pick >= cert.class_ids.size()) return false;
      const auto &chosen = classes[cert.class_ids[pick]];
      for (uint32_t member : chosen.member_ids)
        if (table.maximal_conjugate_union[m].test(member)) return false;
    }
    return true;
  }
  uint32_t m = cert.blocking_maximal;
  if (m >= table.maximal_ids.size()) return false;
  for (uint32_t c : cert.class_ids)
    if (!table.maximal_conjugate_union[m].test(classes[c].rep)) return false;
  return true;
}

namespace {

bool brute_choices(const PermGroup &G, const std::vector<uint32_t> &elem_ids,
                   std::vector<uint32_t> &chosen, std::size_t pos) {
  if (pos == elem_ids.size()) return generates_ids(G, chosen);
  const auto &cls = G.conjugacy_classes()[G.class_of(elem_ids[pos])];
  if (pos == 0) {
    // Simultaneous conjugation: the first choice may be pinned to one member.
    chosen.push_back(cls.rep);
    bool ok = brute_choices(G, elem_ids, chosen, pos + 1);
    chosen.pop_back();
    return ok;
  }
  for (uint32_t member : cls.member_ids) {
    chosen.push_back(member);
    if (!brute_choices(G, elem_ids, chosen, pos + 1)) {
      chosen.pop_back();
      return false;
    }
    chosen.pop_back();
  }
  return true;
}

} // namespace

bool invariably_generates_bruteforce(const PermGroup &G,
                                     const std::vector<uint32_t> &elem_ids,
                                     const BruteBudget &budget) {
  if (G.order() > budget.max_order)
    throw Error(ErrorKind::BudgetExceeded,
                "brute-force oracle capped at order " + std::to_string(budget.max_order));
  if (elem_ids.size() > budget.max_set)
    throw Error(ErrorKind::BudgetExceeded,
                "brute-force oracle capped at " + std::to_string(budget.max_set) + " elements");
  if (G.order() <= PermGroup::kCayleyLimit) G.ensure_cayley();
  if (elem_ids.empty()) return G.order() == 1;
  std::vector<uint32_t> chosen;
  chosen.reserve(elem_ids.size());
  return brute_choices(G, elem_ids, chosen, 0);
}

namespace {

/// Nontrivial classes ordered by ascending size (canonical search order).
std::vector<uint32_t> search_order(const PermGroup &G, bool include_identity) {
  const auto &cls = G.conjugacy_classes();
  std::vector<uint32_t> idx;
  for (uint32_t i = 0; i < cls.size(); ++i)
    if (include_identity || cls[i].element_order > 1) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
    if (cls[a].size() != cls[b].size()) return cls[a].size() < cls[b].size();
    return a < b;
  });
  return idx;
}

void multisets_rec(const IncidenceTable &inc, const std::vector<uint32_t> &order,
                   uint32_t r, std::size_t from, std::vector<uint32_t> &cur,
                   std::vector<std::vector<uint32_t>> &out, bool stop_at_first) {
  if (cur.size() == r) {
    if (check_multiset(inc, cur, nullptr, nullptr)) out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < order.size(); ++i) {
    cur.push_back(order[i]);
    multisets_rec(inc, order, r, i, cur, out, stop_at_first);
    cur.pop_back();
    if (stop_at_first && !out.empty()) return;
  }
}

} // namespace

std::vector<std::vector<uint32_t>> invgen_multisets(const PermGroup &G, uint32_t r,
                                                    bool include_identity,
                                                    uint64_t subgroup_cap) {
  const auto &inc = incidence_table(G, subgroup_cap);
  auto order = search_order(G, include_identity);
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur;
  multisets_rec(inc, order, r, 0, cur, out, false);
  return out;
}

DIResult compute_d_I(const PermGroup &G, uint64_t subgroup_cap) {
  DIResult res;
  if (G.order() == 1) {
    res.value = 0;
    res.cert.kind = InvGenCertificate::Kind::DIExact;
    res.cert.note = "trivial group";
    return res;
  }
  const auto &inc = incidence_table(G, subgroup_cap);
  auto order = search_order(G, /*include_identity=*/false);
  uint32_t start = std::max<uint32_t>(1, d_min_generators(G).d);
  for (uint32_t r = start;; ++r) {
    std::vector<std::vector<uint32_t>> found;
    std::vector<uint32_t> cur;
    multisets_rec(inc, order, r, 0, cur, found, true);
    if (!found.empty()) {
      auto ig = invariably_generates(G, found.front(), subgroup_cap);
      res.value = r;
      res.cert = ig.cert;
      res.cert.kind = InvGenCertificate::Kind::DIExact;
      res.cert.value = r;
      return res;
    }
    if (r > 64)
      throw Error(ErrorKind::Internal, "d_I search runaway"); // log2 bound says unreachable
  }
}

} // namespace invgen
