#include "invgen/poly.hpp"

#include <algorithm>

#include "invgen/errors.hpp"

namespace invgen {

PolyFp poly_add(const PolyFp &a, const PolyFp &b) {
  PrimeField F{a.q};
  std::vector<uint32_t> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return PolyFp(a.q, std::move(c));
}

PolyFp poly_sub(const PolyFp &a, const PolyFp &b) {
  PrimeField F{a.q};
  std::vector<uint32_t> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return PolyFp(a.q, std::move(c));
}

PolyFp poly_mul(const PolyFp &a, const PolyFp &b) {
  if (a.is_zero() || b.is_zero()) return PolyFp::zero(a.q);
  PrimeField F{a.q};
  std::vector<uint32_t> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return PolyFp(a.q, std::move(c));
}

PolyFp poly_monic(const PolyFp &a) {
  if (a.is_zero()) return a;
  PrimeField F{a.q};
  uint32_t inv = F.inv(a.lead());
  PolyFp m = a;
  for (auto &v : m.c) v = F.mul(v, inv);
  return m;
}

PolyFp poly_derivative(const PolyFp &a) {
  PrimeField F{a.q};
  std::vector<uint32_t> c;
  for (std::size_t i = 1; i < a.c.size(); ++i)
    c.push_back(F.mul(a.c[i], uint32_t(i % a.q)));
  return PolyFp(a.q, std::move(c));
}

void poly_divmod(const PolyFp &a, const PolyFp &b, PolyFp &quot, PolyFp &rem) {
  if (b.is_zero()) throw Error(ErrorKind::Internal, "polynomial division by zero");
  PrimeField F{a.q};
  std::vector<uint32_t> r = a.c;
  std::vector<uint32_t> qd(r.size() > b.c.size() ? r.size() - b.c.size() + 1 : 1, 0);
  uint32_t binv = F.inv(b.lead());
  for (int i = int(r.size()) - 1; i >= int(b.c.size()) - 1; --i) {
    uint32_t f = F.mul(r[i], binv);
    if (!f) continue;
    qd[i - (b.c.size() - 1)] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r[i - (b.c.size() - 1) + j] = F.sub(r[i - (b.c.size() - 1) + j], F.mul(f, b.c[j]));
  }
  quot = PolyFp(a.q, std::move(qd));
  rem = PolyFp(a.q, std::move(r));
}

PolyFp poly_mod(const PolyFp &a, const PolyFp &b) {
  PolyFp q, r;
  poly_divmod(a, b, q, r);
  return r;
}

PolyFp poly_div(const PolyFp &a, const PolyFp &b) {
  PolyFp q, r;
  poly_divmod(a, b, q, r);
  if (!r.is_zero()) throw Error(ErrorKind::Internal, "polynomial division is not exact");
  return q;
}

PolyFp poly_gcd(PolyFp a, PolyFp b) {
  while (!b.is_zero()) {
    PolyFp r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a.is_zero() ? a : poly_monic(a);
}

PolyFp poly_lcm(const PolyFp &a, const PolyFp &b) {
  if (a.is_zero() || b.is_zero()) return PolyFp::zero(a.q);
  return poly_monic(poly_div(poly_mul(a, b), poly_gcd(a, b)));
}

PolyFp poly_powmod(const PolyFp &base, uint64_t e, const PolyFp &mod) {
  PolyFp acc = PolyFp::one(base.q);
  PolyFp b = poly_mod(base, mod);
  while (e) {
    if (e & 1) acc = poly_mod(poly_mul(acc, b), mod);
    b = poly_mod(poly_mul(b, b), mod);
    e >>= 1;
  }
  return acc;
}

MatFp poly_eval_matrix(const PolyFp &p, const MatFp &A) {
  MatFp acc(A.q, A.rows, A.cols);
  for (int i = p.deg(); i >= 0; --i) {
    acc = mat_mul(acc, A);
    if (p.c[i]) {
      for (uint32_t d = 0; d < A.rows; ++d)
        acc.at(d, d) = PrimeField{A.q}.add(acc.at(d, d), p.c[i]);
    }
  }
  return acc;
}

namespace {

/// p-th root of f when f(x) = g(x^p); valid over the prime field.
PolyFp pth_root(const PolyFp &f) {
  std::vector<uint32_t> c;
  for (std::size_t i = 0; i < f.c.size(); i += f.q) c.push_back(f.c[i]);
  return PolyFp(f.q, std::move(c));
}

} // namespace

PolyFp poly_radical(const PolyFp &f) {
  PolyFp res = PolyFp::one(f.q);
  PolyFp cur = poly_monic(f);
  while (cur.deg() > 0) {
    PolyFp d = poly_derivative(cur);
    if (d.is_zero()) {
      cur = pth_root(cur);
      continue;
    }
    PolyFp g = poly_gcd(cur, d);
    PolyFp w = poly_div(cur, g); // distinct factors with multiplicity coprime to p
    res = poly_mul(res, poly_div(w, poly_gcd(res, w)));
    cur = g;
  }
  return poly_monic(res);
}

namespace {

PolyFp random_poly(uint32_t q, int max_deg, std::mt19937_64 &rng) {
  std::vector<uint32_t> c(std::size_t(max_deg) + 1);
  for (auto &v : c) v = uint32_t(rng() % q);
  return PolyFp(q, std::move(c));
}

/// Cantor-Zassenhaus equal-degree splitting of a squarefree product of
/// irreducibles all of degree d.
void equal_degree(const PolyFp &f, uint32_t d, std::mt19937_64 &rng,
                  std::vector<PolyFp> &out) {
  if (uint32_t(f.deg()) == d) {
    out.push_back(poly_monic(f));
    return;
  }
  const uint32_t q = f.q;
  for (int tries = 0; tries < 400; ++tries) {
    PolyFp r = random_poly(q, f.deg() - 1, rng);
    if (r.deg() < 1 && q > 2) continue;
    PolyFp s;
    if (q == 2) {
      // Trace map over F_{2^d}.
      PolyFp acc = poly_mod(r, f);
      PolyFp term = acc;
      for (uint32_t i = 1; i < d; ++i) {
        term = poly_mod(poly_mul(term, term), f);
        acc = poly_add(acc, term);
      }
      s = acc;
    } else {
      // r^((q^d-1)/2) = (norm of r)^((q-1)/2) with norm r^(1+q+...+q^(d-1)).
      PolyFp norm = poly_mod(r, f);
      PolyFp frob = norm;
      for (uint32_t i = 1; i < d; ++i) {
        frob = poly_powmod(frob, q, f);
        norm = poly_mod(poly_mul(norm, frob), f);
      }
      s = poly_sub(poly_powmod(norm, (q - 1) / 2, f), PolyFp::one(q));
    }
    PolyFp g = poly_gcd(s, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree(g, d, rng, out);
      equal_degree(poly_div(f, g), d, rng, out);
      return;
    }
  }
  throw Error(ErrorKind::IterationBudgetExceeded, "equal-degree splitting failed");
}

} // namespace

std::vector<PolyFp> poly_factor_distinct(const PolyFp &f, std::mt19937_64 &rng) {
  std::vector<PolyFp> out;
  PolyFp rad = poly_radical(f);
  if (rad.deg() < 1) return out;
  // Distinct-degree splitting: gcd with x^(q^d) - x.
  const uint32_t q = f.q;
  PolyFp cur = rad;
  PolyFp h = poly_mod(PolyFp::x(q), cur); // x^(q^d) mod cur, iterated
  for (uint32_t d = 1; cur.deg() > 0; ++d) {
    if (2 * d > uint32_t(cur.deg())) {
      out.push_back(poly_monic(cur));
      break;
    }
    h = poly_powmod(h, q, cur);
    PolyFp g = poly_gcd(poly_sub(h, PolyFp::x(q)), cur);
    if (g.deg() > 0) {
      equal_degree(g, d, rng, out);
      cur = poly_div(cur, g);
      h = poly_mod(h, cur);
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyFp &a, const PolyFp &b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
  });
  return out;
}

bool poly_is_irreducible(const PolyFp &f, std::mt19937_64 &rng) {
  if (f.deg() < 1) return false;
  if (f.deg() == 1) return true;
  return poly_factor_distinct(f, rng).size() == 1 &&
         poly_radical(f).deg() == f.deg();
}

namespace {

/// Row span with pivots restricted to the first n columns; the trailing
/// `aug` columns carry the expression of each vector in the Krylov chain.
struct AugSpan {
  uint32_t q, n, aug;
  std::vector<std::vector<uint32_t>> rows;
  std::vector<uint32_t> pivots;

  AugSpan(uint32_t q_, uint32_t n_, uint32_t aug_) : q(q_), n(n_), aug(aug_) {}

  // Returns the augmented residue when the vector part reduces to zero.
  std::vector<uint32_t> *insert(std::vector<uint32_t> row, std::vector<uint32_t> &residue) {
    PrimeField F{q};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      uint32_t f = row[pivots[i]];
      if (!f) continue;
      for (std::size_t j = 0; j < row.size(); ++j)
        row[j] = F.sub(row[j], F.mul(f, rows[i][j]));
    }
    uint32_t lead = n;
    for (uint32_t j = 0; j < n; ++j)
      if (row[j]) {
        lead = j;
        break;
      }
    if (lead == n) {
      residue = std::move(row);
      return &residue;
    }
    uint32_t inv = F.inv(row[lead]);
    for (auto &v : row) v = F.mul(v, inv);
    rows.push_back(std::move(row));
    pivots.push_back(lead);
    return nullptr;
  }
};

} // namespace

PolyFp min_poly(const MatFp &A) {
  const uint32_t n = A.rows;
  const uint32_t q = A.q;
  if (n == 0) return PolyFp::one(q);
  PolyFp mu = PolyFp::one(q);
  RowSpace covered(q, n);
  for (uint32_t seed = 0; seed < n && uint32_t(mu.deg()) < n; ++seed) {
    std::vector<uint32_t> v(n, 0);
    v[seed] = 1;
    if (covered.contains(v)) continue;
    AugSpan span(q, n, n + 1);
    std::vector<uint32_t> cur = v;
    for (uint32_t k = 0;; ++k) {
      std::vector<uint32_t> row(n + n + 1, 0);
      std::copy(cur.begin(), cur.end(), row.begin());
      row[n + k] = 1;
      std::vector<uint32_t> residue;
      if (span.insert(std::move(row), residue)) {
        // residue holds coefficients of the local minimal polynomial
        std::vector<uint32_t> coeffs(residue.begin() + n, residue.end());
        mu = poly_lcm(mu, PolyFp(q, std::move(coeffs)));
        break;
      }
      covered.insert(cur);
      cur = vec_mat(cur, A);
    }
  }
  return poly_monic(mu);
}

} // namespace invgen
