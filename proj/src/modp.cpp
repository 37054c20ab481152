#include "famzv/modp.hpp"

#include <cmath>
#include <stdexcept>

namespace famzv {

std::vector<i64> primes_in_range(i64 lo, i64 hi) {
  if (lo < 2 || lo > hi || hi > kMaxPrime)
    throw std::invalid_argument("primes_in_range: need 2 <= lo <= hi <= 1e7");
  // Sieve of Eratosthenes on [0, hi].
  std::vector<bool> composite(static_cast<size_t>(hi) + 1, false);
  for (i64 i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (i64 j = i * i; j <= hi; j += i) composite[j] = true;
  }
  std::vector<i64> out;
  for (i64 n = lo; n <= hi; ++n)
    if (!composite[n]) out.push_back(n);
  return out;
}

std::vector<i64> odd_primes_in_range(i64 lo, i64 hi) {
  if (lo > hi || hi > kMaxPrime)
    throw std::invalid_argument("odd_primes_in_range: bad range");
  if (hi < 3) return {};
  return primes_in_range(lo < 3 ? 3 : lo, hi);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 pow_mod(i64 a, u64 e, i64 p) {
  a = reduce_mod(a, p);
  i64 r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

i64 inv_mod(i64 a, i64 p) {
  a = reduce_mod(a, p);
  if (a == 0) throw std::domain_error("inv_mod: division by zero mod p");
  // Extended Euclid: track only the coefficient of a.
  i64 r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 r2 = r0 - q * r1;
    i64 t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  return reduce_mod(t0, p);
}

std::vector<i64> batch_inverse(std::span<const i64> values, i64 p) {
  const size_t n = values.size();
  std::vector<i64> out(n);
  if (n == 0) return out;
  // Prefix products, one inversion, then peel back.
  std::vector<i64> prefix(n);
  i64 acc = 1;
  for (size_t i = 0; i < n; ++i) {
    i64 v = reduce_mod(values[i], p);
    if (v == 0) throw std::domain_error("batch_inverse: zero element");
    acc = mul_mod(acc, v, p);
    prefix[i] = acc;
  }
  i64 inv_acc = inv_mod(acc, p);
  for (size_t i = n; i-- > 1;) {
    out[i] = mul_mod(inv_acc, prefix[i - 1], p);
    inv_acc = mul_mod(inv_acc, reduce_mod(values[i], p), p);
  }
  out[0] = inv_acc;
  return out;
}

std::vector<i64> inverse_table(i64 p) {
  std::vector<i64> inv(static_cast<size_t>(p), 0);
  if (p < 2) return inv;
  std::vector<i64> range(static_cast<size_t>(p) - 1);
  for (i64 m = 1; m < p; ++m) range[m - 1] = m;
  auto inverted = batch_inverse(range, p);
  for (i64 m = 1; m < p; ++m) inv[m] = inverted[m - 1];
  return inv;
}

}  // namespace famzv
