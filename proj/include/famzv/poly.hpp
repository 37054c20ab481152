#ifndef FAMZV_POLY_HPP
#define FAMZV_POLY_HPP

#include <array>
#include <map>
#include <vector>

#include "famzv/modp.hpp"

namespace famzv {

enum class TermMode {
  monomial,  // l1^{e1} l2^{e2}          (resp. m1^{e1} m2^{e2})
  binomial,  // l_anchor^{e1} (l1+l2)^{e2}
};

// One factor of a product term in the two-parameter identities.
struct TermShape {
  int e1 = 0;
  int e2 = 0;
  TermMode mode = TermMode::monomial;
  int anchor = 1;  // binomial mode only: 1 or 2
};

// Polynomial in (l1, l2, m1, m2) over Z/p, bihomogeneous of degree n in the
// l's and m in the m's; c[a][b] is the coefficient of l1^a l2^{n-a} m1^b m2^{m-b}.
class BiHomogPoly {
 public:
  BiHomogPoly(i64 p, int n, int m);

  i64 prime() const { return p_; }
  int lambda_degree() const { return n_; }
  int mu_degree() const { return m_; }

  i64 coeff(int a, int b) const { return c_[idx(a, b)]; }
  void add_coeff(int a, int b, i64 v) { c_[idx(a, b)] = add_mod(c_[idx(a, b)], reduce_mod(v, p_), p_); }

  // Adds scalar times the designated term. Monomial shapes must satisfy
  // e1+e2 == degree; binomial shapes expand with Pascal coefficients.
  void accumulate_term(i64 scalar, const TermShape& lambda_shape,
                       const TermShape& mu_shape);

  bool is_zero() const;
  i64 eval(i64 l1, i64 l2, i64 m1, i64 m2) const;

 private:
  size_t idx(int a, int b) const;
  i64 p_;
  int n_, m_;
  std::vector<i64> c_;
};

// Sparse polynomial in a fixed number of variables over Z/p; no stored
// zero coefficients.
class SparseMultiPoly {
 public:
  SparseMultiPoly(i64 p, int nvars) : p_(p), nvars_(nvars) {}

  i64 prime() const { return p_; }
  int variable_count() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, i64>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exponents, i64 v);
  SparseMultiPoly operator*(const SparseMultiPoly& other) const;
  SparseMultiPoly pow(int e) const;
  SparseMultiPoly operator+(const SparseMultiPoly& other) const;
  SparseMultiPoly scaled(i64 v) const;

  // Sum of the listed variables (zero-based indices).
  static SparseMultiPoly linear_form(i64 p, int nvars, const std::vector<int>& vars);
  static SparseMultiPoly one(i64 p, int nvars);

  bool operator==(const SparseMultiPoly& other) const {
    return p_ == other.p_ && nvars_ == other.nvars_ && terms_ == other.terms_;
  }

 private:
  i64 p_;
  int nvars_;
  std::map<std::vector<int>, i64> terms_;
};

}  // namespace famzv

#endif
