#ifndef INVGEN_FIELD_HPP
#define INVGEN_FIELD_HPP

#include <cstdint>

namespace invgen {

/// Prime field F_q, q < 2^31; elements are uint32_t in [0, q).
struct PrimeField {
  uint32_t q;

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= q ? s - q : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + q - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : q - a; }
  uint32_t mul(uint32_t a, uint32_t b) const { return uint32_t(uint64_t(a) * b % q); }

  uint32_t pow(uint32_t a, uint64_t e) const {
    uint64_t base = a % q, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % q;
      base = base * base % q;
      e >>= 1;
    }
    return uint32_t(acc);
  }

  uint32_t inv(uint32_t a) const { return pow(a, q - 2); }

  uint32_t from_int(int64_t v) const {
    int64_t r = v % int64_t(q);
    return uint32_t(r < 0 ? r + q : r);
  }
};

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

} // namespace invgen

#endif
