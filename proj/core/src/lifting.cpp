#include "invgen/lifting.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "invgen/builders.hpp"
#include "invgen/errors.hpp"
#include "invgen/meataxe.hpp"
#include "invgen/quotient.hpp"

namespace invgen {

namespace {

void require_invgen(const PermGroup &G, const std::vector<uint32_t> &gen_ids,
                    uint64_t subgroup_cap) {
  std::vector<uint32_t> classes;
  classes.reserve(gen_ids.size());
  for (uint32_t g : gen_ids) classes.push_back(G.class_of(g));
  if (!invariably_generates(G, classes, subgroup_cap).ok)
    throw Error(ErrorKind::NotInvariableGenerators,
                "the given elements do not invariably generate the group");
}

uint32_t checked_endo_dim(const GModule &V) {
  std::mt19937_64 rng(0x11F7);
  if (!is_irreducible(V, rng))
    throw Error(ErrorKind::NotIrreducible, "lifting criterion needs an irreducible module");
  return uint32_t(intertwiner_space(V, V).size());
}

/// dim_F C_V(g) / endo_dim, with the integrality required by End-linearity.
uint64_t end_dim_fixed(const GModule &V, uint32_t elem, uint32_t endo) {
  uint32_t dim = fixed_space(V, elem).dim;
  if (dim % endo != 0)
    throw Error(ErrorKind::Internal, "fixed space is not End-linear");
  return dim / endo;
}

} // namespace

uint64_t lifting_bound(const GModule &V, const std::vector<uint32_t> &gen_ids,
                       uint64_t subgroup_cap) {
  require_invgen(*V.group, gen_ids, subgroup_cap);
  uint32_t endo = checked_endo_dim(V);
  uint64_t sum = 0;
  for (uint32_t g : gen_ids) sum += end_dim_fixed(V, g, endo);
  return sum;
}

namespace {

/// Extensions are cached so sweeps over many tuples with the same (V, u)
/// reuse one materialization and its subgroup data.
StructuredGroupPtr lifting_extension(const GModule &V, uint32_t u) {
  struct Key {
    const void *group;
    uint32_t q, dim, u;
    uint64_t mat_hash;
    bool operator<(const Key &o) const {
      return std::tie(group, q, dim, u, mat_hash) <
             std::tie(o.group, o.q, o.dim, o.u, o.mat_hash);
    }
  };
  uint64_t h = 1469598103934665603ull;
  for (const auto &m : V.gen_action)
    for (uint32_t v : m.a) {
      h ^= v;
      h *= 1099511628211ull;
    }
  Key key{V.group.get(), V.q, V.dim, u, h};
  static std::map<Key, StructuredGroupPtr> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto top = StructuredGroup::make_leaf(V.group, "top");
  auto S = StructuredGroup::make_extension({SocleSummand{V, u}}, top, "V^u:G");
  cache.emplace(key, S);
  return S;
}

} // namespace

std::optional<std::vector<std::vector<uint32_t>>>
find_lifting_witness(const GModule &V, uint32_t u, const std::vector<uint32_t> &gen_ids,
                     uint64_t order_budget, uint64_t subgroup_cap) {
  const PermGroup &G = *V.group;
  require_invgen(G, gen_ids, subgroup_cap);
  if (u == 0) return std::vector<std::vector<uint32_t>>(gen_ids.size()); // trivially liftable

  uint64_t ext_order = G.order();
  for (uint32_t i = 0; i < V.dim * u; ++i) {
    ext_order *= V.q;
    if (ext_order > order_budget)
      throw Error(ErrorKind::BudgetExceeded,
                  "witness search capped at extension order " + std::to_string(order_budget));
  }

  auto S = lifting_extension(V, u);
  const auto &mat = S->materialize(order_budget);
  const PermGroup &H = *mat.group;
  const auto &inc = incidence_table(H, std::max<uint64_t>(subgroup_cap, H.order()));

  const uint32_t blocks = uint32_t(mat.block_offset.size());
  uint64_t vec_count = 1;
  for (uint32_t i = 0; i < V.dim * u; ++i) vec_count *= V.q;

  // Per position, the distinct H-classes of (w, g_i) with one representative
  // w for each; invariable generation only sees classes.
  struct Position {
    std::vector<uint32_t> classes;
    std::vector<uint64_t> rep_code;
  };
  std::vector<Position> positions;
  for (uint32_t gid : gen_ids) {
    auto rho = mat.rho_of(gid);
    Position pos;
    std::map<uint32_t, uint64_t> seen;
    for (uint64_t code = 0; code < vec_count; ++code) {
      std::vector<std::vector<uint32_t>> w(blocks, std::vector<uint32_t>(V.dim));
      uint64_t c = code;
      for (uint32_t b = 0; b < blocks; ++b)
        for (uint32_t i = 0; i < V.dim; ++i) {
          w[b][i] = uint32_t(c % V.q);
          c /= V.q;
        }
      uint32_t id = H.id_of(mat.element_perm(w, gid, rho));
      uint32_t cls = H.class_of(id);
      if (seen.emplace(cls, code).second) {
        pos.classes.push_back(cls);
        pos.rep_code.push_back(code);
      }
    }
    positions.push_back(std::move(pos));
  }

  // All combinations of per-position classes.
  std::vector<std::size_t> pick(positions.size(), 0);
  for (;;) {
    std::vector<uint32_t> classes;
    for (std::size_t i = 0; i < positions.size(); ++i)
      classes.push_back(positions[i].classes[pick[i]]);
    bool ok = true;
    for (std::size_t m = 0; m < inc.maximal_ids.size() && ok; ++m) {
      bool avoided = false;
      for (uint32_t c : classes)
        if (!inc.meets[c][m]) {
          avoided = true;
          break;
        }
      ok = avoided;
    }
    if (ok) {
      // Certify with the public decision procedure, then decode the vectors.
      if (!invariably_generates(H, classes, std::max<uint64_t>(subgroup_cap, H.order())).ok)
        throw Error(ErrorKind::Internal, "witness candidate failed re-verification");
      std::vector<std::vector<uint32_t>> witness;
      for (std::size_t i = 0; i < positions.size(); ++i) {
        uint64_t code = positions[i].rep_code[pick[i]];
        std::vector<uint32_t> flat(V.dim * u);
        for (uint32_t j = 0; j < V.dim * u; ++j) {
          flat[j] = uint32_t(code % V.q);
          code /= V.q;
        }
        witness.push_back(std::move(flat));
      }
      return witness;
    }
    std::size_t i = 0;
    while (i < positions.size() && ++pick[i] == positions[i].classes.size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == positions.size()) break;
  }
  return std::nullopt;
}

StructuredBound structured_dI_lower_bound(const StructuredGroup &S, uint32_t r,
                                          uint64_t subgroup_cap) {
  StructuredBound out;
  out.r = r;
  PermGroupPtr T = S.top_group();
  const auto &socle = S.socle_irreducible();
  if (socle.empty())
    throw Error(ErrorKind::MissingAnnotation, "structured bound needs a socle");

  std::vector<uint32_t> endo(socle.size());
  for (std::size_t j = 0; j < socle.size(); ++j)
    endo[j] = uint32_t(intertwiner_space(socle[j].module, socle[j].module).size());

  // Images of r-element invariable generating tuples of S invariably
  // generate the top, possibly with identity entries, so enumerate with the
  // identity class included.
  auto multisets = invgen_multisets(*T, r, /*include_identity=*/true, subgroup_cap);
  if (multisets.empty()) {
    out.certified = true;
    out.note = "top group has no invariably generating multiset of size " + std::to_string(r);
    return out;
  }
  const auto &classes = T->conjugacy_classes();
  bool all_obstructed = true;
  for (const auto &mset : multisets) {
    ObstructionRow row;
    row.class_ids = mset;
    for (std::size_t j = 0; j < socle.size(); ++j) {
      uint64_t avail = 0;
      for (uint32_t c : mset)
        avail += end_dim_fixed(socle[j].module, classes[c].rep, endo[j]);
      if (socle[j].multiplicity > avail) {
        row.component = int(j);
        row.needed = socle[j].multiplicity;
        row.available = avail;
        break;
      }
    }
    if (row.component < 0) all_obstructed = false;
    out.rows.push_back(std::move(row));
  }
  out.certified = all_obstructed;
  return out;
}

uint32_t structured_dI_upper_bound(const StructuredGroup &S, uint64_t subgroup_cap) {
  PermGroupPtr T = S.top_group();
  uint32_t top_di = compute_d_I(*T, subgroup_cap).value;
  uint32_t socle_d = d_G_module(S.socle_module_sum());
  return top_di + socle_d;
}

namespace {

std::vector<uint32_t> module_generators_of_term(const PermGroup &G, const Bitset &A,
                                                uint32_t max_k) {
  // Smallest tuple of elements of A whose G-conjugates generate A.
  auto members = A.members();
  const auto &ggens = G.generator_ids();
  std::vector<uint32_t> pick;
  std::vector<uint32_t> chosen;
  auto closure_is_A = [&](const std::vector<uint32_t> &seeds) {
    return normal_closure_in(G, seeds, ggens).count() == A.count();
  };
  std::function<bool(uint32_t, std::size_t)> rec = [&](uint32_t k, std::size_t from) {
    if (chosen.size() == k) return closure_is_A(chosen);
    for (std::size_t i = from; i < members.size(); ++i) {
      if (members[i] == G.identity_id()) continue;
      chosen.push_back(members[i]);
      if (rec(k, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (uint32_t k = 1; k <= max_k; ++k) {
    chosen.clear();
    if (rec(k, 0)) return chosen;
  }
  throw Error(ErrorKind::Internal,
              "no module generating tuple of the promised size for the derived term");
}

} // namespace

std::vector<uint32_t> prop_le_construct(PermGroupPtr G, uint64_t subgroup_cap,
                                        uint64_t order_cap) {
  if (G->order() == 1) return {};
  if (!derived_data(*G).is_soluble)
    throw Error(ErrorKind::NotSoluble, "the construction needs a soluble group");

  const auto &tab = subgroup_class_table(*G, subgroup_cap);
  std::vector<uint32_t> result;
  if (tab.frattini.count() > 1) {
    // d_I(G) = d_I(G/frat(G)): construct downstairs and lift arbitrarily.
    auto q = make_quotient(G, tab.frattini, order_cap);
    auto down = prop_le_construct(q.group, subgroup_cap, order_cap);
    for (uint32_t y : down) {
      for (uint32_t x = 0; x < G->order(); ++x)
        if (q.push(x) == y) {
          result.push_back(x);
          break;
        }
    }
  } else if (is_abelian(*G)) {
    result = d_min_generators(*G).witness_ids;
  } else {
    auto dd = derived_data(*G);
    const Bitset &A = dd.series[dd.series.size() - 2]; // last nontrivial term
    uint32_t d = d_min_generators(*G).d;
    auto agens = module_generators_of_term(*G, A, d - 1);
    auto q = make_quotient(G, A, order_cap);
    auto down = prop_le_construct(q.group, subgroup_cap, order_cap);
    for (uint32_t y : down) {
      for (uint32_t x = 0; x < G->order(); ++x)
        if (q.push(x) == y) {
          result.push_back(x);
          break;
        }
    }
    result.insert(result.end(), agens.begin(), agens.end());
  }

  std::vector<uint32_t> classes;
  for (uint32_t x : result) classes.push_back(G->class_of(x));
  if (!invariably_generates(*G, classes, subgroup_cap).ok)
    throw Error(ErrorKind::Internal, "constructed sequence failed verification");
  return result;
}

DichotomyReport two_gen_dichotomy_check(PermGroupPtr G, uint64_t subgroup_cap) {
  DichotomyReport rep;
  if (!derived_data(*G).is_soluble)
    throw Error(ErrorKind::NotSoluble, "dichotomy check needs a soluble group");
  rep.d = d_min_generators(*G).d;
  if (rep.d > 2)
    throw Error(ErrorKind::HypothesisViolated, "dichotomy check needs a 2-generated group");
  rep.min_prime = G->min_prime();
  auto di = compute_d_I(*G, subgroup_cap);
  rep.d_I = di.value;

  // The proof's counting: 1 <= sum 1/|g_i| over each minimal multiset.
  for (auto &mset : invgen_multisets(*G, rep.d_I, false, subgroup_cap)) {
    DichotomyReport::Diagnostic diag;
    diag.class_ids = mset;
    uint64_t num = 0, den = 1;
    for (uint32_t c : mset) {
      uint64_t o = G->conjugacy_classes()[c].element_order;
      num = num * o + den;
      den *= o;
    }
    uint64_t g = gcd_u64(num, den);
    diag.num = num / g;
    diag.den = den / g;
    diag.at_least_one = diag.num >= diag.den;
    rep.diagnostics.push_back(std::move(diag));
  }

  if (rep.d_I >= rep.min_prime) {
    rep.first_horn = true;
    return rep;
  }
  rep.first_horn = false;
  rep.q = smallest_splitting_prime(*G);
  auto S = StructuredGroup::make_leaf(G, "G");
  auto H = wreath_regular(rep.q, 1, S);
  rep.h_expr = "wr(" + std::to_string(rep.q) + ",1,G)";
  rep.h_d = H->d_formula().value_or(0);
  rep.certificate = structured_dI_lower_bound(*H, rep.d_I, subgroup_cap);
  return rep;
}

} // namespace invgen
