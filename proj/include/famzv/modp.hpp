#ifndef FAMZV_MODP_HPP
#define FAMZV_MODP_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace famzv {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128_t;

inline constexpr i64 kMaxPrime = 10'000'000;

// Primes in [lo, hi], ascending. Requires 2 <= lo <= hi <= 10^7.
std::vector<i64> primes_in_range(i64 lo, i64 hi);

// Odd primes only (the congruences need sgn^p = sgn).
std::vector<i64> odd_primes_in_range(i64 lo, i64 hi);

bool is_prime(i64 n);

inline i64 mul_mod(i64 a, i64 b, i64 p) { return i64(i128(a) * b % p); }

inline i64 add_mod(i64 a, i64 b, i64 p) {
  i64 s = a + b;
  return s >= p ? s - p : s;
}

inline i64 sub_mod(i64 a, i64 b, i64 p) {
  i64 s = a - b;
  return s < 0 ? s + p : s;
}

inline i64 reduce_mod(i64 a, i64 p) {
  i64 r = a % p;
  return r < 0 ? r + p : r;
}

i64 pow_mod(i64 a, u64 e, i64 p);

// Inverse via extended Euclid. Throws std::domain_error if a == 0 (mod p).
i64 inv_mod(i64 a, i64 p);

// Inverts a whole sequence with one inversion plus multiplications.
// All elements must be nonzero mod p.
std::vector<i64> batch_inverse(std::span<const i64> values, i64 p);

// inv[m] = m^{-1} mod p for m in [1, p-1]; inv[0] = 0.
std::vector<i64> inverse_table(i64 p);

}  // namespace famzv

#endif
