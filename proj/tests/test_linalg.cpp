#include <doctest.h>

#include <random>

#include "invgen/matrix.hpp"
#include "invgen/poly.hpp"

using namespace invgen;

namespace {

MatFp random_matrix(uint32_t q, uint32_t r, uint32_t c, std::mt19937_64 &rng) {
  MatFp M(q, r, c);
  for (auto &v : M.a) v = uint32_t(rng() % q);
  return M;
}

} // namespace

TEST_CASE("rref rank and nullspace annihilate") {
  std::mt19937_64 rng(42);
  for (uint32_t q : {2u, 3u, 7u, 41u}) {
    for (int t = 0; t < 20; ++t) {
      MatFp A = random_matrix(q, 5 + t % 4, 4 + t % 5, rng);
      MatFp N = left_nullspace(A);
      CHECK(N.rows + rank(A) == A.rows);
      for (uint32_t i = 0; i < N.rows; ++i) {
        auto prod = vec_mat(std::vector<uint32_t>(N.row(i), N.row(i) + A.rows), A);
        for (uint32_t v : prod) CHECK(v == 0);
      }
    }
  }
}

TEST_CASE("matrix inverse") {
  std::mt19937_64 rng(7);
  int found = 0;
  while (found < 10) {
    MatFp A = random_matrix(7, 6, 6, rng);
    if (!mat_invertible(A)) continue;
    ++found;
    CHECK(mat_mul(A, mat_inverse(A)).is_identity());
  }
}

TEST_CASE("row space membership and coordinates") {
  RowSpace W(5, 4);
  CHECK(W.insert({1, 2, 0, 3}));
  CHECK(W.insert({0, 1, 1, 0}));
  CHECK_FALSE(W.insert({1, 3, 1, 3})); // sum of the two
  CHECK(W.dim() == 2);
  CHECK(W.contains({2, 4, 0, 1}));
  CHECK_FALSE(W.contains({0, 0, 1, 0}));
}

TEST_CASE("polynomial division and gcd") {
  // (x^2+1)(x+2) over F_5
  PolyFp a(5, {2, 2, 2, 1}); // x^3+2x^2+2x+2... compute: (x^2+1)(x+2) = x^3+2x^2+x+2
  PolyFp f = poly_mul(PolyFp(5, {1, 0, 1}), PolyFp(5, {2, 1}));
  CHECK(f == PolyFp(5, {2, 1, 2, 1}));
  CHECK(poly_gcd(f, PolyFp(5, {1, 0, 1})) == poly_monic(PolyFp(5, {1, 0, 1})));
  PolyFp q, r;
  poly_divmod(f, PolyFp(5, {2, 1}), q, r);
  CHECK(r.is_zero());
  CHECK(q == PolyFp(5, {1, 0, 1}));
  (void)a;
}

TEST_CASE("distinct factorization recovers known factors") {
  std::mt19937_64 rng(3);
  // x^4+x^3+x^2+x+1 is irreducible over F_2 (order of 2 mod 5 is 4)
  PolyFp f(2, {1, 1, 1, 1, 1});
  auto fs = poly_factor_distinct(f, rng);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].deg() == 4);
  CHECK(poly_is_irreducible(f, rng));

  // x^6-1 over F_7 splits into six linear factors
  PolyFp g(7, {6, 0, 0, 0, 0, 0, 1});
  auto gs = poly_factor_distinct(g, rng);
  CHECK(gs.size() == 6);
  for (const auto &h : gs) CHECK(h.deg() == 1);

  // x^7-1 over F_2 = (x+1) * two cubics
  PolyFp h(2, {1, 0, 0, 0, 0, 0, 0, 1});
  auto hs = poly_factor_distinct(h, rng);
  REQUIRE(hs.size() == 3);
  CHECK(hs[0].deg() == 1);
  CHECK(hs[1].deg() == 3);
  CHECK(hs[2].deg() == 3);
  // product reassembles since x^7-1 is squarefree over F_2
  PolyFp prod = PolyFp::one(2);
  for (const auto &u : hs) prod = poly_mul(prod, u);
  CHECK(prod == poly_monic(h));

  // squares are detected via the radical
  PolyFp sq = poly_mul(PolyFp(3, {1, 1}), PolyFp(3, {1, 1}));
  CHECK(poly_radical(sq) == poly_monic(PolyFp(3, {1, 1})));
  CHECK_FALSE(poly_is_irreducible(sq, rng));
}

TEST_CASE("minimal polynomial of companion and diagonal matrices") {
  // Companion matrix of x^3+2x+1 over F_5 (acting on rows).
  PolyFp f(5, {1, 2, 0, 1});
  MatFp C(5, 3, 3);
  C.at(0, 1) = 1;
  C.at(1, 2) = 1;
  C.at(2, 0) = 4; // -1
  C.at(2, 1) = 3; // -2
  C.at(2, 2) = 0;
  CHECK(min_poly(C) == poly_monic(f));

  // diag(1,1,2) over F_7 has minimal polynomial (x-1)(x-2)
  MatFp D(7, 3, 3);
  D.at(0, 0) = 1;
  D.at(1, 1) = 1;
  D.at(2, 2) = 2;
  CHECK(min_poly(D) == poly_mul(PolyFp(7, {6, 1}), PolyFp(7, {5, 1})));

  CHECK(poly_eval_matrix(min_poly(C), C).is_zero());
}

TEST_CASE("min poly annihilates random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    MatFp A = random_matrix(3, 6, 6, rng);
    PolyFp mu = min_poly(A);
    CHECK(poly_eval_matrix(mu, A).is_zero());
    CHECK(mu.deg() >= 1);
    CHECK(mu.deg() <= 6);
  }
}
