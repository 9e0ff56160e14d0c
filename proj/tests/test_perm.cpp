#include <doctest.h>

#include "invgen/errors.hpp"
#include "invgen/perm.hpp"

using namespace invgen;

TEST_CASE("cycle notation round trip") {
  auto p = Permutation::parse("(1,2,3)(4,5)");
  CHECK(p.degree() == 5);
  CHECK(p.str() == "(1,2,3)(4,5)");
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(2) == 0);
  CHECK(p.apply(3) == 4);

  CHECK(Permutation(4).str() == "()");
  CHECK(Permutation::parse("()").degree() == 1);
  CHECK(Permutation::parse("()", 6) == Permutation(6));
}

TEST_CASE("composition is apply-left-then-right") {
  auto a = Permutation::parse("(1,2)", 3);
  auto b = Permutation::parse("(2,3)", 3);
  // 1 ^ (a*b): a sends 1->2, b sends 2->3
  CHECK((a * b).apply(0) == 2);
  // 1 ^ (b*a): b fixes 1, a sends 1->2
  CHECK((b * a).apply(0) == 1);
  CHECK((b * a).apply(1) == 2);
}

TEST_CASE("inverse and order") {
  auto p = Permutation::parse("(1,2,3)(4,5)");
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.order() == 6);
  CHECK(Permutation(7).order() == 1);
  CHECK(Permutation::parse("(1,2,3,4,5,6,7)").order() == 7);
}

TEST_CASE("conjugation relabels cycles") {
  auto p = Permutation::parse("(1,2)", 3);
  auto g = Permutation::parse("(1,3)", 3);
  CHECK(p.conjugate_by(g).str() == "(2,3)");
}

TEST_CASE("invalid permutations rejected") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation::parse("(1,2"), Error);
  CHECK_THROWS_AS(Permutation::parse("(0,1)"), Error);
}

TEST_CASE("associativity spot check") {
  auto a = Permutation::parse("(1,2,3,4)", 5);
  auto b = Permutation::parse("(2,5)", 5);
  auto c = Permutation::parse("(1,5,3)", 5);
  CHECK(((a * b) * c) == (a * (b * c)));
}
