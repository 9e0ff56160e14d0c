#include "invgen/perm_group.hpp"

#include <algorithm>
#include <deque>

#include "invgen/errors.hpp"

namespace invgen {

PermGroupPtr PermGroup::from_generators(std::vector<Permutation> gens, uint64_t order_cap) {
  uint32_t degree = 1;
  for (const auto &g : gens) degree = std::max(degree, g.degree());
  for (auto &g : gens)
    if (g.degree() != degree) g = g.extended(degree);

  auto G = std::shared_ptr<PermGroup>(new PermGroup());
  G->degree_ = degree;
  G->gens_ = gens;

  // Closure by BFS from the identity; right-multiplying by generators reaches
  // every word, and in a finite group words already form the subgroup.
  std::unordered_map<Permutation, uint32_t, PermHash> seen;
  std::vector<Permutation> elems;
  Permutation id(degree);
  seen.emplace(id, 0);
  elems.push_back(id);
  std::deque<uint32_t> queue{0};
  while (!queue.empty()) {
    uint32_t cur = queue.front();
    queue.pop_front();
    Permutation base = elems[cur];
    for (const auto &g : gens) {
      Permutation next = base * g;
      if (seen.emplace(next, uint32_t(elems.size())).second) {
        if (elems.size() >= order_cap)
          throw Error(ErrorKind::OrderCapExceeded,
                      "group closure exceeds order cap " + std::to_string(order_cap));
        elems.push_back(next);
        queue.push_back(uint32_t(elems.size() - 1));
      }
    }
  }

  std::sort(elems.begin(), elems.end());
  G->elements_ = std::move(elems);
  const uint64_t n = G->elements_.size();
  G->index_.reserve(n * 2);
  for (uint32_t i = 0; i < n; ++i) G->index_.emplace(G->elements_[i], i);
  G->identity_ = G->index_.at(id);

  G->gen_ids_.reserve(gens.size());
  for (const auto &g : gens) G->gen_ids_.push_back(G->index_.at(g));

  G->rmul_gen_.assign(gens.size(), std::vector<uint32_t>(n));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (uint32_t i = 0; i < n; ++i)
      G->rmul_gen_[k][i] = G->index_.at(G->elements_[i] * gens[k]);

  // BFS words over sorted ids, used to evaluate module actions on elements.
  G->words_.assign(n, {0, 0});
  {
    std::vector<bool> visited(n, false);
    visited[G->identity_] = true;
    G->words_[G->identity_] = {G->identity_, 0};
    std::deque<uint32_t> q{G->identity_};
    std::size_t reached = 1;
    while (!q.empty()) {
      uint32_t cur = q.front();
      q.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        uint32_t nxt = G->rmul_gen_[k][cur];
        if (!visited[nxt]) {
          visited[nxt] = true;
          G->words_[nxt] = {cur, uint32_t(k)};
          q.push_back(nxt);
          ++reached;
        }
      }
    }
    if (reached != n)
      throw Error(ErrorKind::Internal, "closure BFS did not reach every element");
  }

  G->inverse_.resize(n);
  G->elem_order_.resize(n);
  G->exponent_ = 1;
  for (uint32_t i = 0; i < n; ++i) {
    G->inverse_[i] = G->index_.at(G->elements_[i].inverse());
    G->elem_order_[i] = G->elements_[i].order();
    G->exponent_ = lcm_u64(G->exponent_, G->elem_order_[i]);
  }
  G->order_fact_ = factorize_u64(n);
  return G;
}

std::optional<uint32_t> PermGroup::find(const Permutation &p) const {
  Permutation q = p.degree() == degree_ ? p : p.extended(degree_);
  if (q.degree() != degree_) return std::nullopt;
  auto it = index_.find(q);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

uint32_t PermGroup::id_of(const Permutation &p) const {
  auto id = find(p);
  if (!id)
    throw Error(ErrorKind::ElementNotInGroup, "permutation " + p.str() + " is not a group member");
  return *id;
}

uint32_t PermGroup::mul(uint32_t a, uint32_t b) const {
  if (!cayley_.empty()) return cayley_[std::size_t(a) * order() + b];
  return index_.at(elements_[a] * elements_[b]);
}

uint32_t PermGroup::power(uint32_t a, uint64_t e) const {
  uint32_t acc = identity_;
  e %= elem_order_[a];
  for (uint64_t i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

bool PermGroup::has_cayley() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return !cayley_.empty();
}

void PermGroup::ensure_cayley() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!cayley_.empty()) return;
  const uint64_t n = order();
  if (n > kCayleyLimit)
    throw Error(ErrorKind::OrderCapExceeded,
                "multiplication table limited to order " + std::to_string(kCayleyLimit));
  cayley_.resize(n * n);
  // Fill columns along the BFS tree: x*y = (x*parent(y))*gen(y), so each
  // entry costs one generator-table lookup.
  std::vector<uint32_t> bfs_order;
  bfs_order.reserve(n);
  {
    std::vector<bool> done(n, false);
    bfs_order.push_back(identity_);
    done[identity_] = true;
    for (std::size_t head = 0; head < bfs_order.size(); ++head) {
      uint32_t cur = bfs_order[head];
      for (const auto &tab : rmul_gen_) {
        uint32_t nxt = tab[cur];
        if (!done[nxt]) {
          done[nxt] = true;
          bfs_order.push_back(nxt);
        }
      }
    }
  }
  for (uint32_t x = 0; x < n; ++x) cayley_[std::size_t(x) * n + identity_] = x;
  for (uint32_t y : bfs_order) {
    if (y == identity_) continue;
    auto [parent, genk] = words_[y];
    const auto &tab = rmul_gen_[genk];
    for (uint32_t x = 0; x < n; ++x)
      cayley_[std::size_t(x) * n + y] = tab[cayley_[std::size_t(x) * n + parent]];
  }
}

const std::vector<ConjugacyClass> &PermGroup::conjugacy_classes() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!classes_.empty()) return classes_;
  const uint64_t n = order();
  std::vector<int64_t> cls(n, -1);
  std::vector<ConjugacyClass> classes;
  // Conjugation by the generators already spans each class orbit.
  std::vector<std::vector<uint32_t>> conj_gen(gens_.size(), std::vector<uint32_t>(n));
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    const Permutation &g = gens_[k];
    Permutation gi = g.inverse();
    for (uint32_t x = 0; x < n; ++x)
      conj_gen[k][x] = index_.at(gi * elements_[x] * g);
  }
  for (uint32_t x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    ConjugacyClass c;
    c.rep = x;
    c.element_order = elem_order_[x];
    std::deque<uint32_t> q{x};
    cls[x] = int64_t(classes.size());
    c.member_ids.push_back(x);
    while (!q.empty()) {
      uint32_t cur = q.front();
      q.pop_front();
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        uint32_t y = conj_gen[k][cur];
        if (cls[y] < 0) {
          cls[y] = int64_t(classes.size());
          c.member_ids.push_back(y);
          q.push_back(y);
        }
      }
    }
    std::sort(c.member_ids.begin(), c.member_ids.end());
    c.rep = c.member_ids.front(); // ids are lex-sorted, so least id = least images
    classes.push_back(std::move(c));
  }
  // Canonical order: element order, then class size, then least representative.
  std::vector<uint32_t> perm_idx(classes.size());
  for (uint32_t i = 0; i < classes.size(); ++i) perm_idx[i] = i;
  std::sort(perm_idx.begin(), perm_idx.end(), [&](uint32_t a, uint32_t b) {
    const auto &A = classes[a], &B = classes[b];
    if (A.element_order != B.element_order) return A.element_order < B.element_order;
    if (A.size() != B.size()) return A.size() < B.size();
    return A.rep < B.rep;
  });
  classes_.reserve(classes.size());
  class_of_.assign(n, 0);
  for (uint32_t new_id = 0; new_id < perm_idx.size(); ++new_id) {
    classes_.push_back(std::move(classes[perm_idx[new_id]]));
    for (uint32_t m : classes_.back().member_ids) class_of_[m] = new_id;
  }
  return classes_;
}

uint32_t PermGroup::class_of(uint32_t id) const {
  conjugacy_classes();
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return class_of_[id];
}

Bitset PermGroup::closure_ids(const std::vector<uint32_t> &sub_gens) const {
  const uint64_t n = order();
  Bitset in(n);
  std::vector<uint32_t> list;
  in.set(identity_);
  list.push_back(identity_);
  for (uint32_t g : sub_gens)
    if (!in.test(g)) {
      in.set(g);
      list.push_back(g);
    }
  bool table;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    table = !cayley_.empty();
  }
  for (std::size_t head = 0; head < list.size(); ++head) {
    uint32_t x = list[head];
    for (uint32_t g : sub_gens) {
      uint32_t y = table ? cayley_[std::size_t(x) * n + g]
                         : index_.at(elements_[x] * elements_[g]);
      if (!in.test(y)) {
        in.set(y);
        list.push_back(y);
      }
    }
  }
  return in;
}

std::vector<uint32_t> small_generating_set(const PermGroup &G, const Bitset &H) {
  std::vector<uint32_t> gens;
  const std::size_t target = H.count();
  Bitset cur = G.closure_ids({});
  if (cur.count() == target) return gens;
  for (std::size_t m = 0; m < H.size(); ++m) {
    if (!H.test(m) || cur.test(m)) continue;
    gens.push_back(uint32_t(m));
    cur = G.closure_ids(gens);
    if (cur.count() == target) break;
  }
  return gens;
}

Bitset normal_closure_in(const PermGroup &G, const std::vector<uint32_t> &seeds,
                         const std::vector<uint32_t> &conjugators) {
  Bitset sub = G.closure_ids(seeds);
  for (;;) {
    std::vector<uint32_t> extra;
    for (std::size_t m = 0; m < sub.size(); ++m) {
      if (!sub.test(m)) continue;
      for (uint32_t g : conjugators) {
        uint32_t c = G.conj(uint32_t(m), g);
        if (!sub.test(c)) extra.push_back(c);
      }
    }
    if (extra.empty()) return sub;
    auto cur = sub.members();
    cur.insert(cur.end(), extra.begin(), extra.end());
    sub = G.closure_ids(cur);
  }
}

Bitset commutator_subgroup(const PermGroup &G, const Bitset &H) {
  // [H,H] is the normal closure in H of the commutators of a generating set.
  auto hg = small_generating_set(G, H);
  std::vector<uint32_t> seeds;
  for (uint32_t a : hg)
    for (uint32_t b : hg)
      seeds.push_back(G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b)));
  return normal_closure_in(G, seeds, hg);
}

DerivedData derived_data(const PermGroup &G) {
  if (G.order() <= PermGroup::kCayleyLimit) G.ensure_cayley();
  DerivedData d;
  Bitset cur(G.order());
  for (uint32_t i = 0; i < G.order(); ++i) cur.set(i);
  d.series.push_back(cur);
  for (;;) {
    Bitset next = commutator_subgroup(G, d.series.back());
    if (next.count() == d.series.back().count()) break;
    d.series.push_back(next);
    if (next.count() == 1) break;
  }
  d.is_soluble = d.series.back().count() == 1;
  d.derived_length = uint32_t(d.series.size() - 1);
  return d;
}

bool is_abelian(const PermGroup &G) {
  for (uint32_t a : G.generator_ids())
    for (uint32_t b : G.generator_ids())
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

bool is_nilpotent(const PermGroup &G) {
  // Lower central series via generator commutators and normal closures.
  if (G.order() <= PermGroup::kCayleyLimit) G.ensure_cayley();
  const auto &ggens = G.generator_ids();
  Bitset cur(G.order());
  for (uint32_t i = 0; i < G.order(); ++i) cur.set(i);
  for (;;) {
    auto kgens = small_generating_set(G, cur);
    std::vector<uint32_t> seeds;
    for (uint32_t a : ggens)
      for (uint32_t b : kgens)
        seeds.push_back(G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b)));
    Bitset next = normal_closure_in(G, seeds, ggens);
    if (next.count() == cur.count()) return next.count() == 1;
    if (next.count() == 1) return true;
    cur = next;
  }
}

} // namespace invgen
