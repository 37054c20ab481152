#ifndef FAMZV_ZETA_HPP
#define FAMZV_ZETA_HPP

#include <cstddef>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "famzv/indices.hpp"
#include "famzv/modp.hpp"

namespace famzv {

// Sum over 0 < m_1 < ... < m_r < p of prod sgn(a_i)^{m_i} / m_i^{|a_i|}
// mod p, by the linear-time DP (one running value per depth level).
// inv must be inverse_table(p).
i64 famzv_dp(const SignedIndex& idx, i64 p, std::span<const i64> inv);

// Convenience wrapper building the inverse table each call.
i64 famzv(const SignedIndex& idx, i64 p);

// Reference oracle: literal nested summation, Fermat-power inverses.
// Requires p <= 200.
i64 famzv_naive(const SignedIndex& idx, i64 p);

// The concrete stand-in for an element of the ring: one residue per prime
// over a stated range.
struct AdeleVector {
  std::vector<i64> primes;  // ascending
  std::vector<i64> values;  // values[i] reduced mod primes[i]
};

struct AdeleCompare {
  bool equal_in_ring = false;        // all disagreements below the threshold
  std::vector<i64> differing;        // primes where components differ
};

AdeleVector famzv_adele(const SignedIndex& idx, std::span<const i64> primes,
                        bool parallel = true);

// Equality in the ring ignores finitely many components: verdict is
// "equal" iff every disagreeing prime is < threshold.
AdeleCompare adele_equal(const AdeleVector& a, const AdeleVector& b, i64 threshold);

// Line-delimited JSON cache of (index, p) -> value. Invalid lines are
// skipped and counted. Writes are serialized.
class ZetaCache {
 public:
  explicit ZetaCache(std::string path);

  bool lookup(const std::vector<int>& index, i64 p, i64& value) const;
  void store(const std::vector<int>& index, i64 p, i64 value);

  std::size_t invalid_lines() const { return invalid_lines_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::string path_;
  std::map<std::pair<std::vector<int>, i64>, i64> entries_;
  std::size_t invalid_lines_ = 0;
  mutable std::mutex mu_;
};

// Per-prime evaluation context: inverse table built once, values memoized
// so repeated concatenated indices cost one DP each.
class ZetaEvaluator {
 public:
  explicit ZetaEvaluator(i64 p, ZetaCache* cache = nullptr);

  i64 value(const SignedIndex& idx);

  i64 prime() const { return p_; }
  std::size_t evals() const { return evals_; }

 private:
  i64 p_;
  std::vector<i64> inv_;
  std::map<std::vector<int>, i64> memo_;
  ZetaCache* cache_;
  std::size_t evals_ = 0;
};

}  // namespace famzv

#endif
