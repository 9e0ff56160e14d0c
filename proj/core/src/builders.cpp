#include "invgen/builders.hpp"

#include <numeric>

#include "invgen/errors.hpp"
#include "invgen/gen_analysis.hpp"
#include "invgen/module_counts.hpp"

namespace invgen {

PermGroupPtr cyclic_group(uint32_t n) {
  if (n == 0) throw Error(ErrorKind::ParseError, "C0 is not a group");
  if (n == 1) return PermGroup::from_generators({});
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return PermGroup::from_generators({Permutation(std::move(img))});
}

PermGroupPtr symmetric_group(uint32_t n, uint64_t order_cap) {
  if (n <= 1) return PermGroup::from_generators({});
  std::vector<uint32_t> cycle(n);
  for (uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  std::vector<uint32_t> swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0u);
  std::swap(swap01[0], swap01[1]);
  return PermGroup::from_generators({Permutation(swap01), Permutation(cycle)}, order_cap);
}

PermGroupPtr alternating_group(uint32_t n, uint64_t order_cap) {
  if (n <= 2) return PermGroup::from_generators({});
  std::vector<Permutation> gens;
  for (uint32_t i = 2; i < n; ++i) {
    std::vector<uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    img[0] = 1;
    img[1] = i;
    img[i] = 0;
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup::from_generators(gens, order_cap);
}

PermGroupPtr dihedral_group(uint32_t n) {
  if (n == 0) throw Error(ErrorKind::ParseError, "D0 is not a group");
  if (n == 1) return cyclic_group(2);
  if (n == 2) {
    return PermGroup::from_generators(
        {Permutation::parse("(1,2)", 4), Permutation::parse("(3,4)", 4)});
  }
  std::vector<uint32_t> rot(n), refl(n);
  for (uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup::from_generators({Permutation(rot), Permutation(refl)});
}

PermGroupPtr sdc_group(uint32_t n, uint32_t m, uint32_t k) {
  if (n == 0 || m == 0) throw Error(ErrorKind::ParseError, "sdc needs positive orders");
  k %= n;
  if (std::gcd(k, n) != 1)
    throw Error(ErrorKind::ParseError, "sdc action x -> x^k needs gcd(k,n) = 1");
  uint64_t kk = 1;
  for (uint32_t i = 0; i < m; ++i) kk = kk * k % n;
  if (n > 1 && kk != 1 % n)
    throw Error(ErrorKind::ParseError, "sdc action must satisfy k^m = 1 (mod n)");
  // Points 0..n-1 carry C_n; points n..n+m-1 carry C_m.
  std::vector<uint32_t> a(n + m), b(n + m);
  std::iota(a.begin(), a.end(), 0u);
  std::iota(b.begin(), b.end(), 0u);
  for (uint32_t i = 0; i < n; ++i) a[i] = (i + 1) % n;
  for (uint32_t i = 0; i < n; ++i) b[i] = uint32_t(uint64_t(i) * k % n);
  for (uint32_t i = 0; i < m; ++i) b[n + i] = n + (i + 1) % m;
  return PermGroup::from_generators({Permutation(a), Permutation(b)});
}

StructuredGroupPtr semidirect_module_group(const GModule &V, uint32_t u,
                                           StructuredGroupPtr G, std::string expr,
                                           uint64_t meataxe_seed) {
  if (expr.empty()) expr = "sd(" + G->expr() + ")";
  if (u == 0) return G; // empty socle
  std::vector<SocleSummand> socle{{V, u}};
  return StructuredGroup::make_extension(std::move(socle), std::move(G), std::move(expr),
                                         meataxe_seed);
}

StructuredGroupPtr wreath_regular(uint64_t q, uint32_t m, StructuredGroupPtr G,
                                  std::string expr, uint64_t order_cap) {
  if (!is_prime_u64(q)) throw Error(ErrorKind::ParseError, "wreath base needs a prime q");
  if (m == 0) return G;
  PermGroupPtr T;
  if (G->is_leaf())
    T = G->leaf();
  else if (G->materializable(order_cap))
    T = G->materialize(order_cap).group;
  else
    throw Error(ErrorKind::OrderCapExceeded,
                "regular wreath needs its top materialized; " + G->expr() +
                    " has order " + G->order().str());
  if (T->order() % q == 0)
    throw Error(ErrorKind::NonCoprimePrime, "wreath formula needs gcd(q, |G|) = 1");
  if (expr.empty())
    expr = "wr(" + std::to_string(q) + "," + std::to_string(m) + "," + G->expr() + ")";
  GModule reg = regular_module(T, uint32_t(q));
  uint32_t d_val = std::max(d_min_generators(*T).d, m + 1);
  std::vector<SocleSummand> socle{{reg, m}};
  return StructuredGroup::make_extension(std::move(socle), G, std::move(expr), 0x5EED,
                                         d_val, std::nullopt);
}

StructuredGroupPtr prop_geq_group(uint32_t d) {
  if (d == 0) throw Error(ErrorKind::HypothesisViolated, "geq needs d >= 1");
  // K = C_2^d on 2d points.
  std::vector<Permutation> kgens;
  for (uint32_t i = 0; i < d; ++i) {
    std::vector<uint32_t> img(2 * d);
    std::iota(img.begin(), img.end(), 0u);
    std::swap(img[2 * i], img[2 * i + 1]);
    kgens.push_back(Permutation(std::move(img)));
  }
  PermGroupPtr K = PermGroup::from_generators(kgens);
  auto top = StructuredGroup::make_leaf(K, "C2^" + std::to_string(d));

  // One F_3 line per nonzero functional phi: k acts trivially iff phi(k) = 0.
  std::vector<uint32_t> kgen_ids;
  for (const auto &g : kgens) kgen_ids.push_back(K->id_of(g));
  std::vector<SocleSummand> socle;
  for (uint32_t phi = 1; phi < (1u << d); ++phi) {
    GModule V;
    V.group = K;
    V.q = 3;
    V.dim = 1;
    for (uint32_t i = 0; i < K->generators().size(); ++i) {
      MatFp m(3, 1, 1);
      m.at(0, 0) = (phi >> i) & 1 ? 2 : 1; // v -> v^2 off the kernel
      V.gen_action.push_back(std::move(m));
    }
    socle.push_back(SocleSummand{std::move(V), d - 1});
  }
  if (d == 1) {
    // alpha = 1, multiplicity d-1 = 0: the group is just K = C_2.
    return top;
  }
  return StructuredGroup::make_extension(std::move(socle), top,
                                         "geq(" + std::to_string(d) + ")", 0x5EED,
                                         std::nullopt, 2);
}

StructuredGroupPtr tower_group(uint32_t d, uint64_t p, uint32_t l, uint64_t order_cap) {
  if (d == 0 || l == 0) throw Error(ErrorKind::HypothesisViolated, "tower needs d, l >= 1");
  if (!is_prime_u64(p)) throw Error(ErrorKind::HypothesisViolated, "tower needs p prime");
  // l < (p-1)/(d-1) + 1, i.e. (l-1)(d-1) < p-1.
  if (d > 1 && uint64_t(l - 1) * (d - 1) >= p - 1)
    throw Error(ErrorKind::HypothesisViolated,
                "tower level out of range: need l < (p-1)/(d-1) + 1");

  // G_1 = C_p^d on d*p points.
  std::vector<Permutation> gens;
  for (uint32_t i = 0; i < d; ++i) {
    std::vector<uint32_t> img(d * p);
    std::iota(img.begin(), img.end(), 0u);
    for (uint32_t j = 0; j < p; ++j) img[i * p + j] = i * p + (j + 1) % p;
    gens.push_back(Permutation(std::move(img)));
  }
  StructuredGroupPtr cur = StructuredGroup::make_leaf(
      PermGroup::from_generators(gens),
      "tower(" + std::to_string(d) + "," + std::to_string(p) + ",1)");
  if (d == 1) return cur; // V^0: every level equals C_p

  for (uint32_t level = 2; level <= l; ++level) {
    PermGroupPtr T;
    if (cur->is_leaf()) {
      T = cur->leaf();
    } else {
      if (!cur->materializable(order_cap))
        throw Error(ErrorKind::OrderCapExceeded,
                    "tower level " + std::to_string(level) +
                        " needs the previous level materialized; its order " +
                        cur->order().str() + " exceeds the cap");
      T = cur->materialize(order_cap).group;
    }
    uint64_t q = smallest_splitting_prime(*T);
    if (q <= p)
      throw Error(ErrorKind::Internal, "splitting prime not above min pi in tower");
    GModule reg = regular_module(T, uint32_t(q));
    std::string name = "tower(" + std::to_string(d) + "," + std::to_string(p) + "," +
                       std::to_string(level) + ")";
    std::vector<SocleSummand> socle{{reg, d - 1}};
    cur = StructuredGroup::make_extension(std::move(socle), cur, name, 0x5EED,
                                          d, level);
  }
  return cur;
}

} // namespace invgen
