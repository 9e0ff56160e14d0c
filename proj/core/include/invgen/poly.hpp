#ifndef INVGEN_POLY_HPP
#define INVGEN_POLY_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "invgen/field.hpp"
#include "invgen/matrix.hpp"

namespace invgen {

/// Polynomial over F_q, coefficients ascending, trailing zeros stripped.
struct PolyFp {
  uint32_t q = 2;
  std::vector<uint32_t> c;

  PolyFp() = default;
  PolyFp(uint32_t q_, std::vector<uint32_t> coeffs) : q(q_), c(std::move(coeffs)) { trim(); }

  static PolyFp zero(uint32_t q) { return PolyFp(q, {}); }
  static PolyFp one(uint32_t q) { return PolyFp(q, {1}); }
  static PolyFp x(uint32_t q) { return PolyFp(q, {0, 1}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return int(c.size()) - 1; }
  uint32_t lead() const { return c.back(); }
  uint32_t coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
  bool operator==(const PolyFp &o) const { return q == o.q && c == o.c; }
};

PolyFp poly_add(const PolyFp &a, const PolyFp &b);
PolyFp poly_sub(const PolyFp &a, const PolyFp &b);
PolyFp poly_mul(const PolyFp &a, const PolyFp &b);
PolyFp poly_monic(const PolyFp &a);
PolyFp poly_derivative(const PolyFp &a);
void poly_divmod(const PolyFp &a, const PolyFp &b, PolyFp &quot, PolyFp &rem);
PolyFp poly_mod(const PolyFp &a, const PolyFp &b);
PolyFp poly_div(const PolyFp &a, const PolyFp &b);
PolyFp poly_gcd(PolyFp a, PolyFp b); // monic
PolyFp poly_lcm(const PolyFp &a, const PolyFp &b);
PolyFp poly_powmod(const PolyFp &base, uint64_t e, const PolyFp &mod);

/// Evaluate p at a square matrix (Horner).
MatFp poly_eval_matrix(const PolyFp &p, const MatFp &A);

/// Product of the distinct irreducible factors.
PolyFp poly_radical(const PolyFp &f);

/// Distinct irreducible factors (no multiplicities), deterministic under rng.
std::vector<PolyFp> poly_factor_distinct(const PolyFp &f, std::mt19937_64 &rng);

bool poly_is_irreducible(const PolyFp &f, std::mt19937_64 &rng);

/// Minimal polynomial of a square matrix over F_q.
PolyFp min_poly(const MatFp &A);

} // namespace invgen

#endif
