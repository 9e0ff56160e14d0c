#include <doctest.h>

#include <numeric>
#include <random>

#include "invgen/errors.hpp"
#include "invgen/perm_group.hpp"

using namespace invgen;

namespace {

PermGroupPtr group_of(const std::vector<std::string> &gens) {
  std::vector<Permutation> ps;
  uint32_t deg = 0;
  for (const auto &s : gens) deg = std::max(deg, Permutation::parse(s).degree());
  for (const auto &s : gens) ps.push_back(Permutation::parse(s, deg));
  return PermGroup::from_generators(ps);
}

} // namespace

TEST_CASE("closure of S3 generators") {
  auto G = group_of({"(1,2)", "(1,2,3)"});
  CHECK(G->order() == 6);
  CHECK(G->exponent() == 6);
}

TEST_CASE("empty generating set gives the trivial group") {
  auto G = PermGroup::from_generators({});
  CHECK(G->order() == 1);
  CHECK(G->exponent() == 1);
  CHECK(G->element(G->identity_id()).is_identity());
}

TEST_CASE("order-21 Frobenius group from its generators") {
  auto G = group_of({"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"});
  CHECK(G->order() == 21);
  CHECK(G->exponent() == 21);
  CHECK(G->min_prime() == 3);
}

TEST_CASE("order cap enforced") {
  std::vector<Permutation> gens = {Permutation::parse("(1,2)", 6),
                                   Permutation::parse("(1,2,3,4,5,6)")};
  CHECK_THROWS_AS(PermGroup::from_generators(gens, 100), Error); // |S6| = 720
}

TEST_CASE("conjugacy classes of S3") {
  auto G = group_of({"(1,2)", "(1,2,3)"});
  const auto &cls = G->conjugacy_classes();
  REQUIRE(cls.size() == 3);
  // Canonical order: by element order.
  CHECK(cls[0].size() == 1);
  CHECK(cls[0].element_order == 1);
  CHECK(cls[1].size() == 3);
  CHECK(cls[1].element_order == 2);
  CHECK(cls[2].size() == 2);
  CHECK(cls[2].element_order == 3);
}

TEST_CASE("abelian groups split into singleton classes") {
  auto G = group_of({"(1,2,3,4)"});
  CHECK(G->conjugacy_classes().size() == 4);
  for (const auto &c : G->conjugacy_classes()) CHECK(c.size() == 1);
}

TEST_CASE("classes of the order-21 group") {
  auto G = group_of({"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"});
  const auto &cls = G->conjugacy_classes();
  REQUIRE(cls.size() == 5);
  std::vector<uint64_t> sizes;
  for (const auto &c : cls) sizes.push_back(c.size());
  CHECK(sizes == std::vector<uint64_t>{1, 7, 7, 3, 3}); // orders 1,3,3,7,7
  CHECK(cls[1].element_order == 3);
  CHECK(cls[3].element_order == 7);
}

TEST_CASE("class partition and size divisibility") {
  for (auto G : {group_of({"(1,2)", "(1,2,3)"}),
                 group_of({"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}),
                 group_of({"(1,2,3,4)", "(1,3)"})}) {
    uint64_t total = 0;
    for (const auto &c : G->conjugacy_classes()) {
      total += c.size();
      CHECK(G->order() % c.size() == 0);
      for (uint32_t m : c.member_ids) CHECK(G->element_order(m) == c.element_order);
    }
    CHECK(total == G->order());
  }
}

TEST_CASE("multiplication table agrees with composition") {
  auto G = group_of({"(1,2)", "(1,2,3,4)"});
  G->ensure_cayley();
  for (uint32_t a = 0; a < G->order(); a += 3)
    for (uint32_t b = 0; b < G->order(); b += 5) {
      auto direct = G->element(a) * G->element(b);
      CHECK(G->element(G->mul(a, b)) == direct);
    }
  CHECK(G->mul(G->inv(5), 5) == G->identity_id());
}

TEST_CASE("derived series of S3") {
  auto G = group_of({"(1,2)", "(1,2,3)"});
  auto d = derived_data(*G);
  CHECK(d.is_soluble);
  CHECK(d.derived_length == 2);
  REQUIRE(d.series.size() == 3);
  CHECK(d.series[1].count() == 3); // A3
  CHECK(d.series[2].count() == 1);
}

TEST_CASE("derived series terms are normal with abelian quotients") {
  auto G = group_of({"(1,2)", "(1,2,3,4)"}); // S4
  auto d = derived_data(*G);
  CHECK(d.is_soluble);
  CHECK(d.derived_length == 3);
  for (std::size_t i = 0; i + 1 < d.series.size(); ++i) {
    const auto &H = d.series[i];
    const auto &K = d.series[i + 1];
    // normality of K in G
    for (uint32_t g : G->generator_ids())
      for (uint32_t x : K.members()) CHECK(K.test(G->conj(x, g)));
    // abelian quotient: commutators of H land in K
    auto gens = small_generating_set(*G, H);
    for (uint32_t a : gens)
      for (uint32_t b : gens) {
        uint32_t comm = G->mul(G->mul(G->inv(a), G->inv(b)), G->mul(a, b));
        CHECK(K.test(comm));
      }
  }
}

TEST_CASE("elementary abelian groups have derived length 1") {
  auto G = group_of({"(1,2)", "(3,4)", "(5,6)"});
  CHECK(G->order() == 8);
  auto d = derived_data(*G);
  CHECK(d.derived_length == 1);
  CHECK(d.is_soluble);
}

TEST_CASE("A5 is not soluble") {
  auto G = group_of({"(1,2,3,4,5)", "(3,4,5)"});
  CHECK(G->order() == 60);
  CHECK_FALSE(derived_data(*G).is_soluble);
}

TEST_CASE("random small groups satisfy the class equation and Lagrange") {
  std::mt19937_64 rng(2024);
  auto random_perm = [&](uint32_t deg) {
    std::vector<uint32_t> img(deg);
    std::iota(img.begin(), img.end(), 0u);
    for (uint32_t i = deg; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
    return Permutation(img);
  };
  for (int trial = 0; trial < 25; ++trial) {
    uint32_t deg = 3 + uint32_t(rng() % 4);
    auto G = PermGroup::from_generators({random_perm(deg), random_perm(deg)});
    uint64_t n = G->order();
    uint64_t degree_fact = 1;
    for (uint32_t i = 2; i <= deg; ++i) degree_fact *= i;
    CHECK(degree_fact % n == 0); // Lagrange in S_deg
    CHECK(n % G->exponent() == 0);
    uint64_t total = 0;
    for (const auto &c : G->conjugacy_classes()) {
      total += c.size();
      CHECK(n % c.size() == 0);
    }
    CHECK(total == n);
    // inverses pair up classes of the same size
    for (const auto &c : G->conjugacy_classes()) {
      uint32_t inv_rep = G->inv(c.rep);
      CHECK(G->conjugacy_classes()[G->class_of(inv_rep)].size() == c.size());
    }
  }
}

TEST_CASE("nilpotency and abelianity checks") {
  CHECK(is_abelian(*group_of({"(1,2,3,4)"})));
  CHECK_FALSE(is_abelian(*group_of({"(1,2)", "(1,2,3)"})));
  CHECK(is_nilpotent(*group_of({"(1,2,3,4)", "(1,3)"}))); // D4, a 2-group
  CHECK_FALSE(is_nilpotent(*group_of({"(1,2)", "(1,2,3)"})));
}
