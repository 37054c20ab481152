#ifndef FAMZV_SERIES_HPP
#define FAMZV_SERIES_HPP

#include <span>
#include <vector>

#include "famzv/indices.hpp"
#include "famzv/modp.hpp"
#include "famzv/report.hpp"

namespace famzv {

// A power series truncated at degree p-1 with coefficients in Z/p. Every
// retained coefficient is the exact reduction of the true rational one:
// Li-series denominators at degree n < p are products of integers <= n.
class TruncSeriesFp {
 public:
  explicit TruncSeriesFp(i64 p) : p_(p), coeff_(static_cast<size_t>(p), 0) {}
  TruncSeriesFp(i64 p, std::vector<i64> coeff);

  i64 prime() const { return p_; }
  i64 coeff(i64 n) const { return coeff_[static_cast<size_t>(n)]; }
  void set_coeff(i64 n, i64 v) { coeff_[static_cast<size_t>(n)] = reduce_mod(v, p_); }
  const std::vector<i64>& coeffs() const { return coeff_; }

  TruncSeriesFp operator+(const TruncSeriesFp& other) const;
  bool operator==(const TruncSeriesFp&) const = default;

 private:
  i64 p_;
  std::vector<i64> coeff_;
};

// Li(alpha; z) truncated at degree p-1: coefficient of z^N is the partial
// FAMZV sum with top level pinned at m_r = N.
TruncSeriesFp li_series(const SignedIndex& idx, i64 p);

// Sum of all stored coefficients mod p.
i64 lp_operator(const TruncSeriesFp& f);

// Cauchy convolution truncated at degree p-1. Throws on prime mismatch.
TruncSeriesFp series_product(const TruncSeriesFp& f, const TruncSeriesFp& g);

// Product congruence: Lp(Li(alpha) Li(beta)) == sgn(beta) (-1)^{wt beta}
// zeta(alpha ++ reverse(beta)) mod p, asserted for p > dep(alpha)+dep(beta);
// smaller primes are evaluated informationally.
VerificationReport verify_lemma2(const SignedIndex& alpha, const SignedIndex& beta,
                                 std::span<const i64> primes, bool parallel = true);

}  // namespace famzv

#endif
