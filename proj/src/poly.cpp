#include "famzv/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace famzv {

namespace {

// Pascal row: C(n, 0..n) mod p.
std::vector<i64> binomial_row(int n, i64 p) {
  std::vector<i64> row(static_cast<size_t>(n) + 1, 0);
  row[0] = 1 % p;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j)
      row[j] = add_mod(row[j], row[j - 1], p);
  return row;
}

}  // namespace

BiHomogPoly::BiHomogPoly(i64 p, int n, int m) : p_(p), n_(n), m_(m) {
  if (p < 2 || n < 0 || m < 0) throw std::invalid_argument("BiHomogPoly: bad parameters");
  c_.assign(static_cast<size_t>(n + 1) * (m + 1), 0);
}

size_t BiHomogPoly::idx(int a, int b) const {
  if (a < 0 || a > n_ || b < 0 || b > m_)
    throw std::out_of_range("BiHomogPoly: exponent out of range");
  return static_cast<size_t>(a) * (m_ + 1) + b;
}

void BiHomogPoly::accumulate_term(i64 scalar, const TermShape& lambda_shape,
                                  const TermShape& mu_shape) {
  scalar = reduce_mod(scalar, p_);
  if (lambda_shape.e1 + lambda_shape.e2 != n_ || mu_shape.e1 + mu_shape.e2 != m_)
    throw std::invalid_argument("accumulate_term: degree mismatch");

  // Exponent of the first variable, with expansion weights.
  auto expand = [this](const TermShape& sh) {
    std::vector<std::pair<int, i64>> out;  // (exponent of var1, coefficient)
    if (sh.mode == TermMode::monomial) {
      out.emplace_back(sh.e1, 1 % p_);
      return out;
    }
    auto row = binomial_row(sh.e2, p_);
    for (int i = 0; i <= sh.e2; ++i) {
      int a = sh.anchor == 1 ? sh.e1 + i : i;
      out.emplace_back(a, row[i]);
    }
    return out;
  };

  for (auto [a, ca] : expand(lambda_shape))
    for (auto [b, cb] : expand(mu_shape))
      add_coeff(a, b, mul_mod(scalar, mul_mod(ca, cb, p_), p_));
}

bool BiHomogPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](i64 v) { return v == 0; });
}

i64 BiHomogPoly::eval(i64 l1, i64 l2, i64 m1, i64 m2) const {
  l1 = reduce_mod(l1, p_);
  l2 = reduce_mod(l2, p_);
  m1 = reduce_mod(m1, p_);
  m2 = reduce_mod(m2, p_);
  i64 total = 0;
  for (int a = 0; a <= n_; ++a) {
    i64 lpart = mul_mod(pow_mod(l1, static_cast<u64>(a), p_),
                        pow_mod(l2, static_cast<u64>(n_ - a), p_), p_);
    for (int b = 0; b <= m_; ++b) {
      i64 v = coeff(a, b);
      if (v == 0) continue;
      i64 mpart = mul_mod(pow_mod(m1, static_cast<u64>(b), p_),
                          pow_mod(m2, static_cast<u64>(m_ - b), p_), p_);
      total = add_mod(total, mul_mod(v, mul_mod(lpart, mpart, p_), p_), p_);
    }
  }
  return total;
}

void SparseMultiPoly::add_term(const std::vector<int>& exponents, i64 v) {
  if (static_cast<int>(exponents.size()) != nvars_)
    throw std::invalid_argument("SparseMultiPoly: exponent vector length mismatch");
  v = reduce_mod(v, p_);
  if (v == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, v);
    return;
  }
  it->second = add_mod(it->second, v, p_);
  if (it->second == 0) terms_.erase(it);
}

SparseMultiPoly SparseMultiPoly::operator*(const SparseMultiPoly& other) const {
  if (p_ != other.p_ || nvars_ != other.nvars_)
    throw std::invalid_argument("SparseMultiPoly: mismatched product operands");
  SparseMultiPoly out(p_, nvars_);
  std::vector<int> key(static_cast<size_t>(nvars_));
  for (const auto& [ea, va] : terms_)
    for (const auto& [eb, vb] : other.terms_) {
      for (int i = 0; i < nvars_; ++i) key[i] = ea[i] + eb[i];
      out.add_term(key, mul_mod(va, vb, p_));
    }
  return out;
}

SparseMultiPoly SparseMultiPoly::pow(int e) const {
  SparseMultiPoly out = one(p_, nvars_);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

SparseMultiPoly SparseMultiPoly::operator+(const SparseMultiPoly& other) const {
  SparseMultiPoly out = *this;
  for (const auto& [e, v] : other.terms_) out.add_term(e, v);
  return out;
}

SparseMultiPoly SparseMultiPoly::scaled(i64 v) const {
  SparseMultiPoly out(p_, nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, mul_mod(reduce_mod(v, p_), c, p_));
  return out;
}

SparseMultiPoly SparseMultiPoly::linear_form(i64 p, int nvars,
                                             const std::vector<int>& vars) {
  SparseMultiPoly out(p, nvars);
  std::vector<int> key(static_cast<size_t>(nvars), 0);
  for (int v : vars) {
    key[v] = 1;
    out.add_term(key, 1);
    key[v] = 0;
  }
  return out;
}

SparseMultiPoly SparseMultiPoly::one(i64 p, int nvars) {
  SparseMultiPoly out(p, nvars);
  out.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), 1);
  return out;
}

}  // namespace famzv
