#include <doctest.h>

#include "invgen/errors.hpp"
#include "invgen/expr.hpp"

using namespace invgen;

TEST_CASE("named families parse") {
  CHECK(parse_group_expr("C12")->leaf()->order() == 12);
  CHECK(parse_group_expr("S3")->leaf()->order() == 6);
  CHECK(parse_group_expr("A4")->leaf()->order() == 12);
  CHECK(parse_group_expr("D4")->leaf()->order() == 8);
  CHECK(parse_group_expr("D6")->leaf()->order() == 12);
}

TEST_CASE("sdc and products parse") {
  CHECK(parse_group_expr("sdc(7,3,2)")->leaf()->order() == 21);
  CHECK(parse_group_expr("x(C2,C2)")->leaf()->order() == 4);
  CHECK(parse_group_expr("x(C2,C2,C2)")->leaf()->order() == 8);
  CHECK(parse_group_expr("x(S3, C4)")->leaf()->order() == 24);
}

TEST_CASE("wreath, geq and tower parse structurally") {
  auto W = parse_group_expr("wr(43,1,sdc(7,3,2))");
  CHECK(W->order().str() == BigUint(21).mul_pow(43, 21).str());
  CHECK(parse_group_expr("geq(2)")->order().str() == "108");
  CHECK(parse_group_expr("tower(2,3,2)")->order().str() == BigUint(9).mul_pow(7, 9).str());
  CHECK(parse_group_expr("wr(3,1,C2)")->materialize().group->order() == 18);
}

TEST_CASE("perm literals parse") {
  auto G = parse_group_expr("perm[(1,2,3);(1,2)]");
  CHECK(G->leaf()->order() == 6);
  auto Q8 = parse_group_expr("perm[(1,2,3,4)(5,8,7,6);(1,5,3,7)(2,6,4,8)]");
  CHECK(Q8->leaf()->order() == 8);
}

TEST_CASE("parse errors carry an offset") {
  for (const char *bad : {"C(bad", "Cx", "wr(4,1,C2)", "x(C2", "nope", "C2 C3", "tower(2,4,1)"}) {
    try {
      parse_group_expr(bad);
      FAIL("expected a parse error for ", bad);
    } catch (const Error &e) {
      bool expected_kind = e.kind() == ErrorKind::ParseError ||
                           e.kind() == ErrorKind::HypothesisViolated;
      CHECK(expected_kind);
    }
  }
  // "C(bad" fails at the integer after C
  try {
    parse_group_expr("C(bad");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("offset 1") != std::string::npos);
  }
}

TEST_CASE("caps propagate through the parser") {
  CHECK_THROWS_AS(parse_group_expr("S6", 100), Error);
}
