#include "invgen/meataxe.hpp"

#include <algorithm>

#include "invgen/errors.hpp"
#include "invgen/poly.hpp"

namespace invgen {

namespace {

MatFp random_algebra_element(const GModule &M, std::mt19937_64 &rng) {
  // Short random words with random coefficients, plus a random scalar.
  MatFp theta(M.q, M.dim, M.dim);
  uint32_t c0 = uint32_t(rng() % M.q);
  for (uint32_t i = 0; i < M.dim; ++i) theta.at(i, i) = c0;
  if (M.gen_action.empty()) return theta;
  const std::size_t n_words = 2 + rng() % 3;
  for (std::size_t w = 0; w < n_words; ++w) {
    MatFp word = MatFp::identity(M.q, M.dim);
    const std::size_t len = 1 + rng() % 3;
    for (std::size_t i = 0; i < len; ++i)
      word = mat_mul(word, M.gen_action[rng() % M.gen_action.size()]);
    uint32_t c = uint32_t(1 + rng() % (M.q - 1));
    theta = mat_add(theta, mat_scale(word, c));
  }
  return theta;
}

GModule transposed_module(const GModule &M) {
  // Dual action: rho*(g) = rho(g^-1)^T; spinning in it finds submodules whose
  // orthogonals are submodules of M.
  GModule T;
  T.group = M.group;
  T.q = M.q;
  T.dim = M.dim;
  for (const auto &g : M.gen_action) T.gen_action.push_back(mat_transpose(mat_inverse(g)));
  return T;
}

RowSpace orthogonal_space(uint32_t q, uint32_t dim, const RowSpace &U) {
  // { x : x . u = 0 for all u in U } as a RowSpace.
  MatFp B = mat_transpose(U.basis()); // dim x k
  MatFp K = left_nullspace(B);
  RowSpace W(q, dim);
  for (uint32_t i = 0; i < K.rows; ++i)
    W.insert(std::vector<uint32_t>(K.row(i), K.row(i) + dim));
  return W;
}

} // namespace

namespace {

RowSpace rows_to_space(uint32_t q, uint32_t width, const MatFp &rows) {
  RowSpace W(q, width);
  for (uint32_t i = 0; i < rows.rows; ++i)
    W.insert(std::vector<uint32_t>(rows.row(i), rows.row(i) + width));
  return W;
}

/// Split via the endomorphism ring: the kernel of a singular nonzero
/// endomorphism is a proper submodule, and in the semisimple setting
/// End = F[eta] a field proves M irreducible. Used when the Norton loop is
/// inconclusive (scrambled isotypic powers); only viable at small dims.
std::optional<RowSpace> endo_split(const GModule &M, std::mt19937_64 &rng,
                                   bool *proven_irreducible) {
  auto E = intertwiner_space(M, M);
  if (E.size() == 1) {
    // Semisimple and End = F: indecomposable, hence irreducible.
    if (proven_irreducible) *proven_irreducible = true;
    return std::nullopt;
  }
  struct Decision {
    int kind = 0; // 0 none, 1 split, 2 proven irreducible
    RowSpace W{2, 0};
  };
  auto try_element = [&](const MatFp &eta) -> Decision {
    if (eta.is_zero()) return {};
    if (!mat_invertible(eta))
      return {1, rows_to_space(M.q, M.dim, left_nullspace(eta))};
    PolyFp mu = min_poly(eta);
    std::mt19937_64 frng(rng());
    auto factors = poly_factor_distinct(mu, frng);
    bool squarefree = poly_radical(mu).deg() == mu.deg();
    if (factors.size() == 1 && squarefree) {
      // End = F[eta] would be a field; conclusive only at full degree.
      if (uint32_t(mu.deg()) == E.size()) return {2, RowSpace{2, 0}};
      return {};
    }
    // A proper divisor of the minimal polynomial evaluates to a nonzero
    // singular endomorphism; its kernel is a proper submodule.
    MatFp feta = poly_eval_matrix(factors.front(), eta);
    if (feta.is_zero() || mat_invertible(feta)) return {};
    return {1, rows_to_space(M.q, M.dim, left_nullspace(feta))};
  };
  auto act = [&](Decision d, std::optional<RowSpace> &out) {
    if (d.kind == 1) {
      out = std::move(d.W);
      return true;
    }
    if (d.kind == 2) {
      if (proven_irreducible) *proven_irreducible = true;
      out = std::nullopt;
      return true;
    }
    return false;
  };
  std::optional<RowSpace> out;
  for (const auto &X : E)
    if (act(try_element(X), out)) return out;
  for (int t = 0; t < 64; ++t) {
    MatFp eta(M.q, M.dim, M.dim);
    for (const auto &X : E) {
      uint32_t c = uint32_t(rng() % M.q);
      if (c) eta = mat_add(eta, mat_scale(X, c));
    }
    if (act(try_element(eta), out)) return out;
  }
  throw Error(ErrorKind::IterationBudgetExceeded,
              "endomorphism splitter exhausted its budget");
}

} // namespace

std::optional<RowSpace> find_proper_submodule(const GModule &M, std::mt19937_64 &rng,
                                              bool *proven_irreducible, int budget) {
  if (proven_irreducible) *proven_irreducible = false;
  if (M.dim == 0) return std::nullopt;
  if (M.dim == 1) {
    if (proven_irreducible) *proven_irreducible = true;
    return std::nullopt;
  }
  if (M.group->order() % M.q == 0)
    throw Error(ErrorKind::NonCoprimePrime,
                "meataxe requires the field characteristic coprime to the group order");

  GModule T = transposed_module(M);
  const uint32_t endo_gate = 16; // End computation is ~dim^6, keep it small
  const int norton_rounds = M.dim <= endo_gate ? std::max(budget / 8, 8) : budget;
  for (int iter = 0; iter < norton_rounds; ++iter) {
    MatFp theta = random_algebra_element(M, rng);
    PolyFp mu = min_poly(theta);
    auto factors = poly_factor_distinct(mu, rng);
    for (const auto &f : factors) {
      MatFp ftheta = poly_eval_matrix(f, theta);
      MatFp N = left_nullspace(ftheta);
      if (N.rows == 0) continue;
      std::vector<uint32_t> v(N.row(0), N.row(0) + M.dim);
      RowSpace W = spin(M, {v});
      if (W.dim() < M.dim) return W;
      if (N.rows == uint32_t(f.deg())) {
        // Norton: nullity equals deg f and v spins to all of M; decide via
        // the dual module.
        MatFp ft = mat_transpose(ftheta);
        MatFp Nt = left_nullspace(ft);
        std::vector<uint32_t> w(Nt.row(0), Nt.row(0) + M.dim);
        RowSpace Wt = spin(T, {w});
        if (Wt.dim() < M.dim) return orthogonal_space(M.q, M.dim, Wt);
        if (proven_irreducible) *proven_irreducible = true;
        return std::nullopt;
      }
    }
  }
  if (M.dim <= endo_gate) return endo_split(M, rng, proven_irreducible);
  throw Error(ErrorKind::IterationBudgetExceeded,
              "meataxe split search exhausted its random-element budget");
}

bool is_irreducible(const GModule &M, std::mt19937_64 &rng, int budget) {
  bool proven = false;
  auto sub = find_proper_submodule(M, rng, &proven, budget);
  return !sub.has_value() && proven;
}

namespace {

/// G-equivariant projection onto the invariant subspace W, averaged over the
/// whole group; its kernel is an invariant complement.
RowSpace maschke_complement(const GModule &M, const RowSpace &W) {
  PrimeField F{M.q};
  const uint32_t n = M.dim, k = W.dim();
  // Coordinate projection onto W along the non-pivot coordinates.
  MatFp Tb(M.q, n, n);
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < n; ++j) Tb.at(i, j) = W.basis().at(i, j);
  {
    std::vector<bool> is_pivot(n, false);
    for (uint32_t p : W.pivots()) is_pivot[p] = true;
    uint32_t r = k;
    for (uint32_t j = 0; j < n; ++j)
      if (!is_pivot[j]) Tb.at(r++, j) = 1;
  }
  MatFp Tinv = mat_inverse(Tb);
  MatFp D(M.q, n, n);
  for (uint32_t i = 0; i < k; ++i) D.at(i, i) = 1;
  MatFp P0 = mat_mul(mat_mul(Tinv, D), Tb);

  auto mats = M.all_matrices();
  MatFp sum(M.q, n, n);
  for (uint32_t g = 0; g < mats.size(); ++g) {
    const MatFp &rho = mats[g];
    const MatFp &rho_inv = mats[M.group->inv(g)];
    sum = mat_add(sum, mat_mul(mat_mul(rho, P0), rho_inv));
  }
  uint32_t scale = F.inv(uint32_t(M.group->order() % M.q));
  MatFp P = mat_scale(sum, scale);

  MatFp K = left_nullspace(P);
  RowSpace C(M.q, n);
  for (uint32_t i = 0; i < K.rows; ++i)
    C.insert(std::vector<uint32_t>(K.row(i), K.row(i) + n));
  if (C.dim() + k != n)
    throw Error(ErrorKind::Internal, "Maschke complement has wrong dimension");
  return C;
}

struct Piece {
  GModule module;
  MatFp basis; // rows in the top-level coordinates
};

MatFp lift_basis(const MatFp &inner, const MatFp &outer) {
  // inner rows are coordinates w.r.t. outer's rows
  return mat_mul(inner, outer);
}

void decompose_rec(const GModule &M, const MatFp &embed, std::mt19937_64 &rng,
                   std::vector<Piece> &out) {
  if (M.dim == 0) return;
  bool proven = false;
  auto sub = find_proper_submodule(M, rng, &proven);
  if (!sub) {
    out.push_back(Piece{M, embed});
    return;
  }
  const RowSpace &W = *sub;
  RowSpace C = maschke_complement(M, W);
  decompose_rec(submodule_action(M, W), lift_basis(W.basis(), embed), rng, out);
  decompose_rec(submodule_action(M, C), lift_basis(C.basis(), embed), rng, out);
}

/// Class-rep trace vector; basis independent, used only for canonical order.
std::vector<uint32_t> trace_fingerprint(const GModule &V) {
  std::vector<uint32_t> tr;
  for (const auto &c : V.group->conjugacy_classes()) {
    MatFp m = V.matrix_of(c.rep);
    uint32_t t = 0;
    PrimeField F{V.q};
    for (uint32_t i = 0; i < m.rows; ++i) t = F.add(t, m.at(i, i));
    tr.push_back(t);
  }
  return tr;
}

} // namespace

IrredDecomposition meataxe_decompose(const GModule &M, uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 1);
  std::vector<Piece> pieces;
  decompose_rec(M, MatFp::identity(M.q, M.dim), rng, pieces);

  // Group by isomorphism type.
  struct Bucket {
    GModule rep;
    std::vector<MatFp> bases;
    std::vector<uint32_t> fp;
  };
  std::vector<Bucket> buckets;
  for (auto &p : pieces) {
    bool placed = false;
    for (auto &b : buckets) {
      if (b.rep.dim == p.module.dim && modules_isomorphic(b.rep, p.module, seed)) {
        b.bases.push_back(p.basis);
        placed = true;
        break;
      }
    }
    if (!placed) buckets.push_back(Bucket{p.module, {p.basis}, trace_fingerprint(p.module)});
  }
  std::sort(buckets.begin(), buckets.end(), [](const Bucket &a, const Bucket &b) {
    if (a.rep.dim != b.rep.dim) return a.rep.dim < b.rep.dim;
    if (a.bases.size() != b.bases.size()) return a.bases.size() < b.bases.size();
    return a.fp < b.fp;
  });

  IrredDecomposition dec;
  MatFp cob(M.q, 0, M.dim);
  for (auto &b : buckets) {
    IrredComponent comp;
    comp.module = b.rep;
    comp.multiplicity = uint32_t(b.bases.size());
    comp.endo_dim = uint32_t(intertwiner_space(b.rep, b.rep).size());
    MatFp stacked(M.q, 0, M.dim);
    for (const auto &basis : b.bases) {
      stacked.a.insert(stacked.a.end(), basis.a.begin(), basis.a.end());
      stacked.rows += basis.rows;
    }
    comp.basis = stacked;
    cob.a.insert(cob.a.end(), stacked.a.begin(), stacked.a.end());
    cob.rows += stacked.rows;
    dec.components.push_back(std::move(comp));
  }
  if (cob.rows != M.dim || !mat_invertible(cob))
    throw Error(ErrorKind::Internal, "decomposition basis is not a basis");
  dec.change_of_basis = std::move(cob);
  return dec;
}

std::vector<MatFp> intertwiner_space(const GModule &V, const GModule &W) {
  if (V.q != W.q)
    throw Error(ErrorKind::FieldMismatch, "intertwiners need a common field");
  if (V.group.get() != W.group.get())
    throw Error(ErrorKind::GroupMismatch, "intertwiners need a common group");
  const uint32_t dv = V.dim, dw = W.dim;
  const uint32_t unknowns = dv * dw;
  // rho_V(g) X = X rho_W(g) as linear conditions on X.
  MatFp sys(V.q, unknowns, uint32_t(V.gen_action.size()) * unknowns);
  PrimeField F{V.q};
  for (uint32_t g = 0; g < V.gen_action.size(); ++g) {
    const MatFp &A = V.gen_action[g]; // dv x dv
    const MatFp &B = W.gen_action[g]; // dw x dw
    // Equation (a,b): sum_i A[a][i] X[i][b] - sum_j X[a][j] B[j][b] = 0
    for (uint32_t a = 0; a < dv; ++a)
      for (uint32_t b = 0; b < dw; ++b) {
        uint32_t eq = g * unknowns + a * dw + b;
        for (uint32_t i = 0; i < dv; ++i)
          sys.at(i * dw + b, eq) = F.add(sys.at(i * dw + b, eq), A.at(a, i));
        for (uint32_t j = 0; j < dw; ++j)
          sys.at(a * dw + j, eq) = F.sub(sys.at(a * dw + j, eq), B.at(j, b));
      }
  }
  MatFp K = left_nullspace(sys);
  std::vector<MatFp> basis;
  for (uint32_t r = 0; r < K.rows; ++r) {
    MatFp X(V.q, dv, dw);
    std::copy(K.row(r), K.row(r) + unknowns, X.a.begin());
    basis.push_back(std::move(X));
  }
  return basis;
}

uint32_t endo_dim(const GModule &V) {
  std::mt19937_64 rng(0xE0D0E0D0ull);
  if (!is_irreducible(V, rng))
    throw Error(ErrorKind::NotIrreducible, "endo_dim requires an irreducible module");
  return uint32_t(intertwiner_space(V, V).size());
}

uint32_t r_G(const GModule &V) {
  uint32_t e = endo_dim(V);
  if (V.dim % e != 0)
    throw Error(ErrorKind::Internal, "endomorphism dimension does not divide dim V");
  return V.dim / e;
}

bool modules_isomorphic(const GModule &V, const GModule &W, uint64_t seed) {
  if (V.q != W.q)
    throw Error(ErrorKind::FieldMismatch, "isomorphism test needs a common field");
  if (V.group.get() != W.group.get())
    throw Error(ErrorKind::GroupMismatch, "isomorphism test needs a common group");
  if (V.dim != W.dim) return false;
  auto basis = intertwiner_space(V, W);
  if (basis.empty()) return false;
  for (const auto &X : basis)
    if (mat_invertible(X)) return true;
  // Sample the solution space for an invertible combination.
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 64; ++t) {
    MatFp X(V.q, V.dim, W.dim);
    for (const auto &B : basis) {
      uint32_t c = uint32_t(rng() % V.q);
      if (c) X = mat_add(X, mat_scale(B, c));
    }
    if (mat_invertible(X)) return true;
  }
  return false;
}

} // namespace invgen
