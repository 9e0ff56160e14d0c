#include <doctest.h>

#include <functional>
#include <random>

#include "invgen/catalog.hpp"
#include "invgen/errors.hpp"
#include "invgen/gen_analysis.hpp"
#include "invgen/quotient.hpp"

using namespace invgen;

namespace {

PermGroupPtr group_of(const std::vector<std::string> &gens) {
  std::vector<Permutation> ps;
  uint32_t deg = 0;
  for (const auto &s : gens) deg = std::max(deg, Permutation::parse(s).degree());
  for (const auto &s : gens) ps.push_back(Permutation::parse(s, deg));
  return PermGroup::from_generators(ps);
}

PermGroupPtr s3() { return group_of({"(1,2)", "(1,2,3)"}); }
PermGroupPtr frob21() { return group_of({"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}); }

uint32_t class_id_of(const PermGroup &G, const std::string &p) {
  return G.class_of(G.id_of(Permutation::parse(p, G.degree())));
}

} // namespace

TEST_CASE("ordinary generation") {
  auto G = s3();
  CHECK(generates(*G, {Permutation::parse("(1,2)", 3), Permutation::parse("(1,2,3)", 3)}));
  CHECK_FALSE(generates(*G, {Permutation::parse("(1,2,3)", 3)}));
  CHECK_THROWS_AS(generates(*G, {Permutation::parse("(1,4)", 4)}), Error);

  auto F = frob21();
  // a single order-3 element only closes to C3
  uint32_t x = F->conjugacy_classes()[1].rep;
  CHECK(F->element_order(x) == 3);
  CHECK_FALSE(generates_ids(*F, {x}));
}

TEST_CASE("minimal generator counts") {
  CHECK(d_min_generators(*group_of({"(1,2)", "(3,4)", "(5,6)"})).d == 3);
  CHECK(d_min_generators(*frob21()).d == 2);
  CHECK(d_min_generators(*group_of({"(1,2,3,4,5)"})).d == 1);
  CHECK(d_min_generators(*PermGroup::from_generators({})).d == 0);
  // witness actually generates
  auto F = frob21();
  auto w = d_min_generators(*F);
  CHECK(generates_ids(*F, w.witness_ids));
}

TEST_CASE("invariable generation of S3 via classes") {
  auto G = s3();
  uint32_t t = class_id_of(*G, "(1,2)");
  uint32_t c = class_id_of(*G, "(1,2,3)");
  auto both = invariably_generates(*G, {c, t});
  CHECK(both.ok);
  CHECK(verify_invgen_certificate(*G, both.cert, true));

  auto twice = invariably_generates(*G, {t, t});
  CHECK_FALSE(twice.ok);
  CHECK(verify_invgen_certificate(*G, twice.cert, false));

  auto cycles = invariably_generates(*G, {c, c});
  CHECK_FALSE(cycles.ok);
}

TEST_CASE("C2 is invariably generated by its involution class") {
  auto G = group_of({"(1,2)"});
  uint32_t inv = class_id_of(*G, "(1,2)");
  CHECK(invariably_generates(*G, {inv}).ok);
}

TEST_CASE("brute-force oracle agrees with the class criterion") {
  for (auto G : {s3(), frob21(), group_of({"(1,2,3,4)", "(1,3)"}),
                 group_of({"(1,2,3,4)"})}) {
    const auto &cls = G->conjugacy_classes();
    const std::size_t k = cls.size();
    // all multisets of classes of size <= 2 (size 3 covered in acceptance)
    for (uint32_t a = 0; a < k; ++a) {
      CHECK(invariably_generates(*G, {a}).ok ==
            invariably_generates_bruteforce(*G, {cls[a].rep}));
      for (uint32_t b = a; b < k; ++b)
        CHECK(invariably_generates(*G, {a, b}).ok ==
              invariably_generates_bruteforce(*G, {cls[a].rep, cls[b].rep}));
    }
  }
}

TEST_CASE("identity never helps the oracle") {
  auto G = s3();
  CHECK_FALSE(invariably_generates_bruteforce(*G, {G->identity_id()}));
  CHECK_FALSE(invariably_generates_bruteforce(
      *G, {G->identity_id(), G->identity_id()}));
}

TEST_CASE("oracle budget errors") {
  auto G = s3();
  BruteBudget tiny{5, 3};
  CHECK_THROWS_AS(invariably_generates_bruteforce(*G, {0}, tiny), Error);
}

TEST_CASE("class invariance: replacing representatives by conjugates") {
  auto G = frob21();
  std::mt19937_64 rng(17);
  const auto &cls = G->conjugacy_classes();
  for (uint32_t a = 1; a < cls.size(); ++a)
    for (uint32_t b = a; b < cls.size(); ++b) {
      bool base = invariably_generates(*G, {a, b}).ok;
      for (int t = 0; t < 4; ++t) {
        uint32_t xa = cls[a].member_ids[rng() % cls[a].member_ids.size()];
        uint32_t xb = cls[b].member_ids[rng() % cls[b].member_ids.size()];
        CHECK(invariably_generates_bruteforce(*G, {xa, xb}) == base);
      }
    }
}

TEST_CASE("d_I values for small groups") {
  auto r = compute_d_I(*s3());
  CHECK(r.value == 2);
  CHECK(r.cert.kind == InvGenCertificate::Kind::DIExact);
  CHECK(verify_invgen_certificate(*s3(), r.cert, true));

  CHECK(compute_d_I(*frob21()).value == 2);
  CHECK(compute_d_I(*group_of({"(1,2)", "(3,4)", "(5,6)"})).value == 3); // C2^3
  CHECK(compute_d_I(*group_of({"(1,2,3)", "(4,5,6)"})).value == 2);      // C3^2
  CHECK(compute_d_I(*group_of({"(1,2,3,4,5)"})).value == 1);
  // Q8: both d and d_I are 2
  auto Q8 = group_of({"(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)"});
  CHECK(compute_d_I(*Q8).value == 2);
}

TEST_CASE("one class never invariably generates S3") {
  auto G = s3();
  for (uint32_t c = 0; c < G->conjugacy_classes().size(); ++c)
    CHECK_FALSE(invariably_generates(*G, {c}).ok);
}

TEST_CASE("quotient monotonicity of invariable generation") {
  auto G = s3();
  const auto &tab = subgroup_class_table(*G);
  uint32_t t = class_id_of(*G, "(1,2)");
  uint32_t c = class_id_of(*G, "(1,2,3)");
  for (const auto &sc : tab.classes) {
    if (!sc.is_normal) continue;
    auto q = make_quotient(G, sc.elems);
    const auto &cls = G->conjugacy_classes();
    std::vector<uint32_t> img = {q.group->class_of(q.push(cls[t].rep)),
                                 q.group->class_of(q.push(cls[c].rep))};
    CHECK(invariably_generates(*q.group, img).ok);
  }
}

TEST_CASE("quotient monotonicity across the catalog") {
  // Every invariably generating multiset of size <= 2, plus the d_I witness,
  // keeps invariably generating in every proper quotient.
  for (const auto &e : verification_catalog()) {
    const auto &G = e.group;
    if (G->order() > 120 || G->order() == 1) continue;
    std::vector<std::vector<uint32_t>> sets;
    for (uint32_t r = 1; r <= 2; ++r)
      for (auto &m : invgen_multisets(*G, r, false)) sets.push_back(m);
    sets.push_back(compute_d_I(*G).cert.class_ids);
    const auto &tab = subgroup_class_table(*G);
    const auto &cls = G->conjugacy_classes();
    for (const auto &sc : tab.classes) {
      if (!sc.is_normal || sc.order == G->order()) continue;
      auto q = make_quotient(G, sc.elems);
      for (const auto &mset : sets) {
        std::vector<uint32_t> img;
        for (uint32_t c : mset) img.push_back(q.group->class_of(q.push(cls[c].rep)));
        CHECK(invariably_generates(*q.group, img).ok);
      }
    }
  }
}

TEST_CASE("bounds: d <= d_I <= log2|G|") {
  for (auto G : {s3(), frob21(), group_of({"(1,2,3,4)", "(1,3)"})}) {
    uint32_t d = d_min_generators(*G).d;
    uint32_t di = compute_d_I(*G).value;
    CHECK(d <= di);
    double log2n = std::log2(double(G->order()));
    CHECK(double(di) <= log2n + 1e-9);
  }
}

TEST_CASE("nilpotent catalog members: every minimal generating multiset invariably generates") {
  for (const auto &e : verification_catalog()) {
    const auto &G = e.group;
    if (G->order() <= 1 || G->order() > 16 || !is_nilpotent(*G)) continue;
    uint32_t d = d_min_generators(*G).d;
    std::vector<uint32_t> tuple;
    std::function<void(std::size_t)> sweep = [&](std::size_t from) {
      if (tuple.size() == d) {
        if (!generates_ids(*G, tuple)) return;
        std::vector<uint32_t> classes;
        for (uint32_t x : tuple) classes.push_back(G->class_of(x));
        CHECK(invariably_generates(*G, classes).ok);
        return;
      }
      for (uint32_t x = uint32_t(from); x < G->order(); ++x) {
        tuple.push_back(x);
        sweep(x);
        tuple.pop_back();
      }
    };
    sweep(0);
  }
}

TEST_CASE("invgen multiset enumeration") {
  auto G = s3();
  auto sets2 = invgen_multisets(*G, 2, false);
  REQUIRE(sets2.size() == 1); // only {transpositions, 3-cycles}
  auto all3 = invgen_multisets(*G, 3, true);
  CHECK(all3.size() > sets2.size());
  for (const auto &m : all3) CHECK(invariably_generates(*G, m).ok);
}
