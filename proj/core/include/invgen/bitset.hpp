#ifndef INVGEN_BITSET_HPP
#define INVGEN_BITSET_HPP

#include <cstdint>
#include <vector>

namespace invgen {

/// Fixed-size bitset used for element sets inside one group (ids 0..n-1).
class Bitset {
public:
  Bitset() : n_(0) {}
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (uint64_t w : w_) c += std::size_t(__builtin_popcountll(w));
    return c;
  }

  bool operator==(const Bitset &o) const { return n_ == o.n_ && w_ == o.w_; }

  Bitset &operator|=(const Bitset &o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset &operator&=(const Bitset &o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  bool subset_of(const Bitset &o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bitset &o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  std::vector<uint32_t> members() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(uint32_t(i));
    return out;
  }

private:
  std::size_t n_;
  std::vector<uint64_t> w_;
};

} // namespace invgen

#endif
