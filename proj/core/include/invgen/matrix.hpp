#ifndef INVGEN_MATRIX_HPP
#define INVGEN_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "invgen/field.hpp"

namespace invgen {

/// Dense row-major matrix over a prime field. Vectors are rows throughout
/// the library (right modules: v -> v * M).
struct MatFp {
  uint32_t q = 2;
  uint32_t rows = 0;
  uint32_t cols = 0;
  std::vector<uint32_t> a;

  MatFp() = default;
  MatFp(uint32_t q_, uint32_t r, uint32_t c) : q(q_), rows(r), cols(c), a(std::size_t(r) * c, 0) {}

  uint32_t &at(uint32_t i, uint32_t j) { return a[std::size_t(i) * cols + j]; }
  uint32_t at(uint32_t i, uint32_t j) const { return a[std::size_t(i) * cols + j]; }
  const uint32_t *row(uint32_t i) const { return a.data() + std::size_t(i) * cols; }
  uint32_t *row(uint32_t i) { return a.data() + std::size_t(i) * cols; }

  static MatFp identity(uint32_t q, uint32_t n);
  bool is_identity() const;
  bool is_zero() const;
  bool operator==(const MatFp &o) const { return q == o.q && rows == o.rows && cols == o.cols && a == o.a; }
};

MatFp mat_mul(const MatFp &A, const MatFp &B);
MatFp mat_add(const MatFp &A, const MatFp &B);
MatFp mat_sub(const MatFp &A, const MatFp &B);
MatFp mat_scale(const MatFp &A, uint32_t c);
MatFp mat_transpose(const MatFp &A);
MatFp mat_pow(const MatFp &A, uint64_t e);

std::vector<uint32_t> vec_mat(const std::vector<uint32_t> &v, const MatFp &M);

/// In-place reduced row echelon form; returns pivot column per echelon row.
std::vector<uint32_t> rref(MatFp &M);

uint32_t rank(MatFp M);

/// Basis (as rows) of { v : v * M = 0 }, the kernel of the row action.
MatFp left_nullspace(const MatFp &M);

/// Inverse of a square matrix; throws if singular.
MatFp mat_inverse(const MatFp &M);
bool mat_invertible(const MatFp &M);

/// Reduce the row vector v against an RREF basis (rows of B with pivots);
/// returns the residue.
std::vector<uint32_t> reduce_against(const MatFp &B, const std::vector<uint32_t> &pivots,
                                     std::vector<uint32_t> v);

/// Incremental row-space basis in RREF form.
class RowSpace {
public:
  explicit RowSpace(uint32_t q, uint32_t width) : basis_(q, 0, width) {}

  /// Inserts v if independent; returns true if the rank grew.
  bool insert(std::vector<uint32_t> v);
  uint32_t dim() const { return basis_.rows; }
  uint32_t width() const { return basis_.cols; }
  const MatFp &basis() const { return basis_; }
  const std::vector<uint32_t> &pivots() const { return pivots_; }
  bool contains(std::vector<uint32_t> v) const;

  /// Coordinates of a member row vector with respect to the RREF basis.
  std::vector<uint32_t> coordinates(const std::vector<uint32_t> &v) const;

private:
  MatFp basis_;
  std::vector<uint32_t> pivots_;
};

} // namespace invgen

#endif
