#ifndef INVGEN_PERM_HPP
#define INVGEN_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace invgen {

/// Permutation of {0..degree-1}, stored as the image sequence.
/// I/O uses 1-based cycle notation, e.g. "(1,2,3)(4,5)"; identity is "()".
///
/// Composition follows the right-action convention: (a * b) means "apply a,
/// then b", so x^(a*b) = (x^a)^b.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(uint32_t degree);            // identity
  explicit Permutation(std::vector<uint32_t> images);

  uint32_t degree() const { return uint32_t(img_.size()); }
  uint32_t apply(uint32_t x) const { return img_[x]; }
  const std::vector<uint32_t> &images() const { return img_; }

  bool is_identity() const;
  Permutation operator*(const Permutation &rhs) const;
  Permutation inverse() const;
  Permutation conjugate_by(const Permutation &g) const; // g^-1 * this * g

  uint64_t order() const; // lcm of cycle lengths

  /// Pads fixed points so the permutation acts on a larger domain.
  Permutation extended(uint32_t degree) const;
  /// Shifts the action to points [offset, offset+degree).
  Permutation shifted(uint32_t offset, uint32_t degree) const;

  std::vector<std::vector<uint32_t>> cycles() const; // nontrivial, 0-based
  std::string str() const;                           // 1-based cycle notation

  /// Parses 1-based cycle notation; degree is max(moved point, min_degree).
  static Permutation parse(const std::string &s, uint32_t min_degree = 0);

  bool operator==(const Permutation &o) const { return img_ == o.img_; }
  bool operator<(const Permutation &o) const { return img_ < o.img_; }

private:
  std::vector<uint32_t> img_;
};

struct PermHash {
  std::size_t operator()(const Permutation &p) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }
};

uint64_t lcm_u64(uint64_t a, uint64_t b);
uint64_t gcd_u64(uint64_t a, uint64_t b);

} // namespace invgen

#endif
