#ifndef INVGEN_BIGINT_HPP
#define INVGEN_BIGINT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace invgen {

/// Unsigned big integer, just enough for exact orders of structured groups
/// (multiply by machine words, compare, print in decimal).
class BigUint {
public:
  BigUint() : limbs_{0} {}
  explicit BigUint(uint64_t v) : limbs_{v % BASE} {
    if (v >= BASE) limbs_.push_back(v / BASE);
  }

  static BigUint one() { return BigUint(1); }

  BigUint &mul_u64(uint64_t m) {
    unsigned __int128 carry = 0;
    for (auto &l : limbs_) {
      unsigned __int128 cur = (unsigned __int128)l * m + carry;
      l = uint64_t(cur % BASE);
      carry = cur / BASE;
    }
    while (carry) {
      limbs_.push_back(uint64_t(carry % BASE));
      carry /= BASE;
    }
    return *this;
  }

  BigUint &mul_pow(uint64_t base, uint64_t exp) {
    for (uint64_t i = 0; i < exp; ++i) mul_u64(base);
    return *this;
  }

  bool fits_u64() const {
    if (limbs_.size() == 1) return true;
    if (limbs_.size() == 2) {
      unsigned __int128 v = (unsigned __int128)limbs_[1] * BASE + limbs_[0];
      return v <= ~uint64_t(0);
    }
    return false;
  }

  uint64_t as_u64() const {
    uint64_t v = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
      v = v * BASE + *it;
    return v;
  }

  std::string str() const {
    std::string s = std::to_string(limbs_.back());
    for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
      std::string part = std::to_string(*it);
      s += std::string(18 - part.size(), '0') + part;
    }
    return s;
  }

  bool operator==(const BigUint &o) const { return limbs_ == o.limbs_; }

private:
  static constexpr uint64_t BASE = 1000000000000000000ull; // 10^18
  std::vector<uint64_t> limbs_;                            // little-endian
};

/// Order of a group kept in factored form: prime -> exponent.
using Factorization = std::map<uint64_t, uint64_t>;

inline Factorization factorize_u64(uint64_t n) {
  Factorization f;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    while (n % p == 0) { ++f[p]; n /= p; }
  if (n > 1) ++f[n];
  return f;
}

inline Factorization merge_factors(const Factorization &a, const Factorization &b) {
  Factorization f = a;
  for (auto [p, e] : b) f[p] += e;
  return f;
}

inline BigUint factored_value(const Factorization &f) {
  BigUint v = BigUint::one();
  for (auto [p, e] : f) v.mul_pow(p, e);
  return v;
}

inline uint64_t smallest_prime_divisor(const Factorization &f) {
  return f.empty() ? 1 : f.begin()->first;
}

} // namespace invgen

#endif
