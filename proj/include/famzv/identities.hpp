#ifndef FAMZV_IDENTITIES_HPP
#define FAMZV_IDENTITIES_HPP

#include <span>
#include <string>
#include <vector>

#include "famzv/indices.hpp"
#include "famzv/modp.hpp"
#include "famzv/poly.hpp"
#include "famzv/report.hpp"
#include "famzv/zeta.hpp"

namespace famzv {

enum class MainMode { alternating, classic };
enum class JudgeMode { symbolic, evaluate };
enum class QConvention { corrected, printed };

struct VerifyOptions {
  JudgeMode judge = JudgeMode::symbolic;
  bool has_seed = false;
  u64 seed = 0;
  bool parallel = true;
  ZetaCache* cache = nullptr;
};

// The 4-parameter sum formula's left side as a bihomogeneous polynomial:
// the signed pure-monomial term plus the two binomial-anchored terms, with
// zeta values over signed index pairs (alternating) or positive pairs
// weighted trivially (classic).
BiHomogPoly build_main_lhs(int n, int m, MainMode mode, ZetaEvaluator& zeta);

// Asserts build_main_lhs == 0 for each prime p > n+m+2; smaller primes are
// evaluated informationally.
VerificationReport verify_main(int n, int m, std::span<const i64> primes,
                               MainMode mode, const VerifyOptions& opts = {});

// Length of the maximal initial |1|-run (0 if the first entry has |.| != 1;
// an all-|1| index counts depth-1).
int weight_w_sgn(const SignedIndex& idx);

// (2^w - 1) * sign when w >= 1, else 0.
i64 weight_J_sgn(const SignedIndex& idx);

// which = 1: the w-weighted sum formula (needs n >= 2, m >= 0).
// which = 2: the J-weighted sum formula (needs n >= 1, m >= 2 even).
// Both sides are computed from independent zeta evaluations and
// cross-checked against poly_eval of build_main_lhs at the corresponding
// substitution point.
VerificationReport verify_corollary(int which, int n, int m,
                                    std::span<const i64> primes,
                                    const VerifyOptions& opts = {});

// zeta(reversed) == (-1)^{weight} sign * zeta, swept over all signed
// indices of weight <= weight_bound (bound <= 6).
VerificationReport verify_reversal(int weight_bound, std::span<const i64> primes,
                                   const VerifyOptions& opts = {});

// All signed indices of weight in [1, weight_bound], every depth and sign
// pattern, deterministic order.
std::vector<SignedIndex> all_signed_indices_up_to_weight(int weight_bound);

// Coefficients attached to the merged intervals of a shuffle: P_i is the
// sum of lambda_j over the original intervals j that cover merged
// interval i under the chain rule.
struct PSigmaTable {
  Shuffle sigma;
  // covers[i] lists the 1-based original-interval ids contributing to
  // P_{i+1}; each list sorted ascending and nonempty.
  std::vector<std::vector<int>> covers;
};

PSigmaTable compute_P_sigma(const Shuffle& sigma);

struct PSigmaSystemCheck {
  bool full_rank = false;         // the chain-rule system over the rationals
  bool solution_matches = false;  // its unique solution equals compute_P_sigma
};

PSigmaSystemCheck check_p_sigma_system(const Shuffle& sigma);

// Both sides of the general s+t-block identity over Z/p, as sparse
// polynomials in lambda_1..lambda_{s+t}, mu_1..mu_{s+t}.
struct GeneralSides {
  SparseMultiPoly lhs;
  SparseMultiPoly rhs;
};

GeneralSides build_general_sides(int s, int t, int n, int m,
                                 QConvention convention, ZetaEvaluator& zeta);

// Asserts lhs == rhs per prime p > n+m+s+t under the given sign convention.
VerificationReport verify_general(int s, int t, int n, int m,
                                  std::span<const i64> primes,
                                  QConvention convention,
                                  const VerifyOptions& opts = {});

// Runs verify_general under both conventions; returns "corrected",
// "printed", "ambiguous" (both pass), or "none".
std::string resolve_sign_convention(int s, int t, int n, int m,
                                    std::span<const i64> primes,
                                    const VerifyOptions& opts = {});

}  // namespace famzv

#endif
