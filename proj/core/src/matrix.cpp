#include "invgen/matrix.hpp"

#include "invgen/errors.hpp"

namespace invgen {

MatFp MatFp::identity(uint32_t q, uint32_t n) {
  MatFp M(q, n, n);
  for (uint32_t i = 0; i < n; ++i) M.at(i, i) = 1;
  return M;
}

bool MatFp::is_identity() const {
  if (rows != cols) return false;
  for (uint32_t i = 0; i < rows; ++i)
    for (uint32_t j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool MatFp::is_zero() const {
  for (uint32_t v : a)
    if (v) return false;
  return true;
}

MatFp mat_mul(const MatFp &A, const MatFp &B) {
  if (A.cols != B.rows || A.q != B.q)
    throw Error(ErrorKind::Internal, "matrix shape mismatch in multiply");
  MatFp C(A.q, A.rows, B.cols);
  const uint64_t q = A.q;
  for (uint32_t i = 0; i < A.rows; ++i) {
    uint32_t *crow = C.row(i);
    for (uint32_t k = 0; k < A.cols; ++k) {
      uint64_t aik = A.at(i, k);
      if (!aik) continue;
      const uint32_t *brow = B.row(k);
      for (uint32_t j = 0; j < B.cols; ++j)
        crow[j] = uint32_t((crow[j] + aik * brow[j]) % q);
    }
  }
  return C;
}

MatFp mat_add(const MatFp &A, const MatFp &B) {
  MatFp C = A;
  PrimeField F{A.q};
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.add(C.a[i], B.a[i]);
  return C;
}

MatFp mat_sub(const MatFp &A, const MatFp &B) {
  MatFp C = A;
  PrimeField F{A.q};
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.sub(C.a[i], B.a[i]);
  return C;
}

MatFp mat_scale(const MatFp &A, uint32_t c) {
  MatFp C = A;
  PrimeField F{A.q};
  for (auto &v : C.a) v = F.mul(v, c);
  return C;
}

MatFp mat_transpose(const MatFp &A) {
  MatFp T(A.q, A.cols, A.rows);
  for (uint32_t i = 0; i < A.rows; ++i)
    for (uint32_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

MatFp mat_pow(const MatFp &A, uint64_t e) {
  MatFp acc = MatFp::identity(A.q, A.rows);
  MatFp base = A;
  while (e) {
    if (e & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<uint32_t> vec_mat(const std::vector<uint32_t> &v, const MatFp &M) {
  std::vector<uint32_t> out(M.cols, 0);
  const uint64_t q = M.q;
  for (uint32_t k = 0; k < M.rows; ++k) {
    uint64_t vk = v[k];
    if (!vk) continue;
    const uint32_t *mrow = M.row(k);
    for (uint32_t j = 0; j < M.cols; ++j)
      out[j] = uint32_t((out[j] + vk * mrow[j]) % q);
  }
  return out;
}

std::vector<uint32_t> rref(MatFp &M) {
  PrimeField F{M.q};
  std::vector<uint32_t> pivots;
  uint32_t r = 0;
  for (uint32_t c = 0; c < M.cols && r < M.rows; ++c) {
    uint32_t piv = r;
    while (piv < M.rows && M.at(piv, c) == 0) ++piv;
    if (piv == M.rows) continue;
    if (piv != r)
      for (uint32_t j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
    uint32_t inv = F.inv(M.at(r, c));
    for (uint32_t j = c; j < M.cols; ++j) M.at(r, j) = F.mul(M.at(r, j), inv);
    for (uint32_t i = 0; i < M.rows; ++i) {
      if (i == r) continue;
      uint32_t f = M.at(i, c);
      if (!f) continue;
      for (uint32_t j = c; j < M.cols; ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  M.rows = r;
  M.a.resize(std::size_t(r) * M.cols);
  return pivots;
}

uint32_t rank(MatFp M) { return uint32_t(rref(M).size()); }

MatFp left_nullspace(const MatFp &M) {
  // v * M = 0  <=>  M^T v^T = 0; read the kernel off the RREF of M^T.
  MatFp T = mat_transpose(M);
  auto pivots = rref(T);
  const uint32_t n = M.rows;
  std::vector<bool> is_pivot(n, false);
  for (uint32_t p : pivots) is_pivot[p] = true;
  PrimeField F{M.q};
  MatFp K(M.q, 0, n);
  for (uint32_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<uint32_t> x(n, 0);
    x[j] = 1;
    for (uint32_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = F.neg(T.at(i, j));
    K.a.insert(K.a.end(), x.begin(), x.end());
    ++K.rows;
  }
  return K;
}

bool mat_invertible(const MatFp &M) {
  return M.rows == M.cols && rank(M) == M.rows;
}

MatFp mat_inverse(const MatFp &M) {
  if (M.rows != M.cols) throw Error(ErrorKind::Internal, "inverse of non-square matrix");
  const uint32_t n = M.rows;
  PrimeField F{M.q};
  MatFp W(M.q, n, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) W.at(i, j) = M.at(i, j);
    W.at(i, n + i) = 1;
  }
  uint32_t r = 0;
  for (uint32_t c = 0; c < n; ++c) {
    uint32_t piv = r;
    while (piv < n && W.at(piv, c) == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::Internal, "matrix is singular");
    if (piv != r)
      for (uint32_t j = 0; j < 2 * n; ++j) std::swap(W.at(piv, j), W.at(r, j));
    uint32_t inv = F.inv(W.at(r, c));
    for (uint32_t j = 0; j < 2 * n; ++j) W.at(r, j) = F.mul(W.at(r, j), inv);
    for (uint32_t i = 0; i < n; ++i) {
      if (i == r) continue;
      uint32_t f = W.at(i, c);
      if (!f) continue;
      for (uint32_t j = 0; j < 2 * n; ++j) W.at(i, j) = F.sub(W.at(i, j), F.mul(f, W.at(r, j)));
    }
    ++r;
  }
  MatFp Inv(M.q, n, n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) Inv.at(i, j) = W.at(i, n + j);
  return Inv;
}

std::vector<uint32_t> reduce_against(const MatFp &B, const std::vector<uint32_t> &pivots,
                                     std::vector<uint32_t> v) {
  PrimeField F{B.q};
  for (uint32_t i = 0; i < B.rows; ++i) {
    uint32_t f = v[pivots[i]];
    if (!f) continue;
    const uint32_t *brow = B.row(i);
    for (uint32_t j = 0; j < B.cols; ++j) v[j] = F.sub(v[j], F.mul(f, brow[j]));
  }
  return v;
}

bool RowSpace::insert(std::vector<uint32_t> v) {
  PrimeField F{basis_.q};
  v = reduce_against(basis_, pivots_, std::move(v));
  uint32_t lead = basis_.cols;
  for (uint32_t j = 0; j < basis_.cols; ++j)
    if (v[j]) {
      lead = j;
      break;
    }
  if (lead == basis_.cols) return false;
  uint32_t inv = F.inv(v[lead]);
  for (auto &x : v) x = F.mul(x, inv);
  // Insert keeping pivot columns ascending, then back-reduce earlier rows.
  uint32_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  basis_.a.insert(basis_.a.begin() + std::size_t(pos) * basis_.cols, v.begin(), v.end());
  basis_.rows += 1;
  pivots_.insert(pivots_.begin() + pos, lead);
  for (uint32_t i = 0; i < basis_.rows; ++i) {
    if (i == pos) continue;
    uint32_t f = basis_.at(i, lead);
    if (!f) continue;
    for (uint32_t j = 0; j < basis_.cols; ++j)
      basis_.at(i, j) = F.sub(basis_.at(i, j), F.mul(f, basis_.at(pos, j)));
  }
  return true;
}

bool RowSpace::contains(std::vector<uint32_t> v) const {
  v = reduce_against(basis_, pivots_, std::move(v));
  for (uint32_t x : v)
    if (x) return false;
  return true;
}

std::vector<uint32_t> RowSpace::coordinates(const std::vector<uint32_t> &v) const {
  std::vector<uint32_t> coords(basis_.rows);
  for (uint32_t i = 0; i < basis_.rows; ++i) coords[i] = v[pivots_[i]];
  return coords;
}

} // namespace invgen
