#include <doctest.h>

#include <random>

#include "invgen/builders.hpp"
#include "invgen/errors.hpp"
#include "invgen/lifting.hpp"
#include "invgen/meataxe.hpp"

using namespace invgen;

namespace {

GModule f3_sign_line(PermGroupPtr C2) {
  GModule V;
  V.group = C2;
  V.q = 3;
  V.dim = 1;
  V.gen_action = {MatFp(3, 1, 1)};
  V.gen_action[0].at(0, 0) = 2;
  return V;
}

} // namespace

TEST_CASE("lifting bound for C2 on the F3 line") {
  auto C2 = cyclic_group(2);
  GModule V = f3_sign_line(C2);
  uint32_t e = C2->identity_id();
  uint32_t f = C2->id_of(Permutation::parse("(1,2)"));
  CHECK(lifting_bound(V, {e, f}) == 1); // C_V(1) = V, C_V(flip) = 0
  CHECK(lifting_bound(V, {f, f}) == 0);
  CHECK(lifting_bound(V, {f}) == 0);
  CHECK(lifting_bound(V, {e, e, f}) == 2);
  // elements that do not invariably generate are rejected
  CHECK_THROWS_AS(lifting_bound(V, {e}), Error);
}

TEST_CASE("lifting witness exists iff u is at most the bound (C2 micro case)") {
  auto C2 = cyclic_group(2);
  GModule V = f3_sign_line(C2);
  uint32_t e = C2->identity_id();
  uint32_t f = C2->id_of(Permutation::parse("(1,2)"));

  auto w11 = find_lifting_witness(V, 1, {e, f});
  REQUIRE(w11.has_value());
  CHECK(w11->size() == 2);

  CHECK_FALSE(find_lifting_witness(V, 1, {f, f}).has_value());
  REQUIRE(find_lifting_witness(V, 2, {e, e, f}).has_value());
  CHECK_FALSE(find_lifting_witness(V, 3, {e, e, f}).has_value());

  auto w0 = find_lifting_witness(V, 0, {e, f});
  REQUIRE(w0.has_value()); // u = 0 is trivially liftable
}

TEST_CASE("witness search respects its budget") {
  auto C2 = cyclic_group(2);
  GModule V = f3_sign_line(C2);
  uint32_t e = C2->identity_id();
  uint32_t f = C2->id_of(Permutation::parse("(1,2)"));
  CHECK_THROWS_AS(find_lifting_witness(V, 3, {e, f}, 10), Error);
}

TEST_CASE("necessity of the lifting bound on a materialized extension, faithfulness not needed") {
  // V = F3 line for C2^2 with kernel <b>: nonfaithful irreducible.
  auto K = PermGroup::from_generators(
      {Permutation::parse("(1,2)", 4), Permutation::parse("(3,4)", 4)});
  GModule V;
  V.group = K;
  V.q = 3;
  V.dim = 1;
  MatFp inv(3, 1, 1), one(3, 1, 1);
  inv.at(0, 0) = 2;
  one.at(0, 0) = 1;
  V.gen_action = {inv, one}; // kernel contains the second generator
  auto top = StructuredGroup::make_leaf(K, "C2^2");
  auto S = StructuredGroup::make_extension({SocleSummand{V, 1}}, top, "V:K");
  const auto &mat = S->materialize();
  const PermGroup &H = *mat.group;
  CHECK(H.order() == 12);

  uint32_t endo = endo_dim(V);
  const auto &hcls = H.conjugacy_classes();
  // Every invariably generating pair of H obeys u <= sum dim_End C_V(g_i).
  for (uint32_t a = 0; a < hcls.size(); ++a)
    for (uint32_t b = a; b < hcls.size(); ++b) {
      if (!invariably_generates(H, {a, b}).ok) continue;
      uint32_t ga = mat.project_top[hcls[a].rep];
      uint32_t gb = mat.project_top[hcls[b].rep];
      // images invariably generate the top
      CHECK(invariably_generates(*K, {K->class_of(ga), K->class_of(gb)}).ok);
      uint64_t avail = fixed_space(V, ga).dim / endo + fixed_space(V, gb).dim / endo;
      CHECK(1 <= avail);
    }
}

TEST_CASE("structured lower bound: wr(3,1,C2) certifies d_I(S3) > 1") {
  auto C2 = StructuredGroup::make_leaf(cyclic_group(2), "C2");
  auto W = wreath_regular(3, 1, C2);
  auto bound = structured_dI_lower_bound(*W, 1);
  CHECK(bound.certified);
  // cross-check on the materialized group
  CHECK(compute_d_I(*W->materialize().group).value == 2);
}

TEST_CASE("structured lower bound: wr(43,1,sdc(7,3,2)) certifies d_I >= 3") {
  auto F21 = StructuredGroup::make_leaf(sdc_group(7, 3, 2), "sdc(7,3,2)");
  CHECK(compute_d_I(*F21->leaf()).value == 2);
  auto W = wreath_regular(43, 1, F21);
  auto bound = structured_dI_lower_bound(*W, 2);
  CHECK(bound.certified);
  // every enumerated invariably generating pair is obstructed by a component
  uint32_t obstructed = 0;
  for (const auto &row : bound.rows) {
    if (row.component >= 0) {
      ++obstructed;
      CHECK(row.needed > row.available);
    }
  }
  CHECK(obstructed == bound.rows.size());
  CHECK(bound.rows.size() > 0);
}

TEST_CASE("structured lower bound can be unsatisfied (trivial-action line)") {
  // V trivial F5 line over C2: C_V(g) = V always, so u = 1 is never obstructed.
  auto C2 = StructuredGroup::make_leaf(cyclic_group(2), "C2");
  GModule V = trivial_module(C2->leaf(), 5);
  auto S = StructuredGroup::make_extension({SocleSummand{V, 1}}, C2, "C10-ish");
  auto bound = structured_dI_lower_bound(*S, 1);
  CHECK_FALSE(bound.certified);
}

TEST_CASE("tower level two: lower and upper structured bounds meet at 3") {
  auto T2 = tower_group(2, 3, 2);
  auto low = structured_dI_lower_bound(*T2, 2);
  CHECK(low.certified); // d_I > 2
  CHECK(structured_dI_upper_bound(*T2) == 3);
}

TEST_CASE("wr(5,1,C2^2): structured bound matches brute d_I on 2500 elements") {
  auto V4 = StructuredGroup::make_leaf(
      PermGroup::from_generators(
          {Permutation::parse("(1,2)", 4), Permutation::parse("(3,4)", 4)}),
      "C2^2");
  auto W = wreath_regular(5, 1, V4);
  auto bound = structured_dI_lower_bound(*W, 2);
  CHECK(bound.certified);
  const auto &mat = W->materialize();
  REQUIRE(mat.group->order() == 2500);
  CHECK(compute_d_I(*mat.group, 2600).value == 3);
}

TEST_CASE("prop_le_construct on small groups") {
  auto S3 = PermGroup::from_generators(
      {Permutation::parse("(1,2)", 3), Permutation::parse("(1,2,3)", 3)});
  auto seq = prop_le_construct(S3);
  CHECK(seq.size() <= 3); // dl(d-1)+1 with dl = 2, d = 2
  std::vector<uint32_t> classes;
  for (uint32_t x : seq) classes.push_back(S3->class_of(x));
  CHECK(invariably_generates(*S3, classes).ok);

  // abelian: a minimal generating set
  auto C9 = cyclic_group(9);
  CHECK(prop_le_construct(C9).size() == 1);
  auto V8 = PermGroup::from_generators({Permutation::parse("(1,2)", 6),
                                        Permutation::parse("(3,4)", 6),
                                        Permutation::parse("(5,6)", 6)});
  CHECK(prop_le_construct(V8).size() == 3);

  // Frattini reduction: Q8 -> C2^2, bound 2
  auto Q8 = PermGroup::from_generators({Permutation::parse("(1,2,3,4)(5,8,7,6)"),
                                        Permutation::parse("(1,5,3,7)(2,6,4,8)")});
  auto q8seq = prop_le_construct(Q8);
  CHECK(q8seq.size() == 2);

  // D4 has dl = 2, d = 2: at most 3, and verification passes
  auto D4 = dihedral_group(4);
  auto d4seq = prop_le_construct(D4);
  CHECK(d4seq.size() <= 3);
}

TEST_CASE("prop_le_construct on geq(2) achieves the exact value 3") {
  auto G = prop_geq_group(2);
  auto H = G->materialize().group;
  auto seq = prop_le_construct(H);
  CHECK(seq.size() == 3); // = l(d-1)+1 = 2*1+1 and d_I = 3 exactly
  CHECK(compute_d_I(*H).value == 3);
}

TEST_CASE("dichotomy: S3 lands on the first horn") {
  auto S3 = PermGroup::from_generators(
      {Permutation::parse("(1,2)", 3), Permutation::parse("(1,2,3)", 3)});
  auto rep = two_gen_dichotomy_check(S3);
  CHECK(rep.first_horn);
  CHECK(rep.min_prime == 2);
  CHECK(rep.d_I == 2);
  // each minimal multiset's sum 1/|g_i| printed as an exact fraction
  REQUIRE(!rep.diagnostics.empty());
  for (const auto &d : rep.diagnostics) CHECK(d.den != 0);
}

TEST_CASE("dichotomy: sdc(7,3,2) needs the wreath and gets a certificate") {
  auto rep = two_gen_dichotomy_check(sdc_group(7, 3, 2));
  CHECK_FALSE(rep.first_horn);
  CHECK(rep.min_prime == 3);
  CHECK(rep.d_I == 2);
  CHECK(rep.q == 43);
  CHECK(rep.h_d == 2);
  CHECK(rep.certificate.certified);
  // the proof's counting gives sum 1/|g_i| = 1/3 + 1/7 < 1 for every multiset
  for (const auto &d : rep.diagnostics) CHECK_FALSE(d.at_least_one);
}

TEST_CASE("dichotomy: C3^2 also takes the second horn") {
  auto C3sq = PermGroup::from_generators(
      {Permutation::parse("(1,2,3)", 6), Permutation::parse("(4,5,6)", 6)});
  auto rep = two_gen_dichotomy_check(C3sq);
  CHECK_FALSE(rep.first_horn);
  CHECK(rep.min_prime == 3);
  CHECK(rep.d_I == 2);
  CHECK(rep.q == 7);
  CHECK(rep.certificate.certified);
}

TEST_CASE("scaling identity: the proof's arithmetic chain on a decomposition") {
  // |G| = sum n_j^2 and sum_j n_j dim C_Vj(g) = |G| / |g| combine into the
  // bound |G| <= sum_i |G| / |g_i| exactly when every component inequality
  // holds.
  auto G = sdc_group(7, 3, 2);
  auto dec = meataxe_decompose(regular_module(G, 43), 5);
  uint64_t sum_sq = 0;
  for (const auto &c : dec.components) sum_sq += uint64_t(c.multiplicity) * c.module.dim;
  CHECK(sum_sq == G->order());
  for (const auto &mset : invgen_multisets(*G, 2, false)) {
    const auto &cls = G->conjugacy_classes();
    uint64_t rhs = 0;
    for (uint32_t c : mset) rhs += G->order() / cls[c].element_order;
    bool all_components_satisfied = true;
    for (const auto &comp : dec.components) {
      uint64_t avail = 0;
      for (uint32_t c : mset) avail += fixed_space(comp.module, cls[c].rep).dim;
      if (comp.multiplicity > avail) all_components_satisfied = false;
    }
    // per-element block bookkeeping ties the two sides together
    if (all_components_satisfied) CHECK(G->order() <= rhs);
    if (G->order() > rhs) CHECK_FALSE(all_components_satisfied);
  }
}
