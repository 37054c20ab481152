#include "famzv/zeta.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace famzv {

i64 famzv_dp(const SignedIndex& idx, i64 p, std::span<const i64> inv) {
  const auto& e = idx.entries();
  const int r = idx.depth();
  if (r >= p) return 0;  // no chain 0 < m_1 < ... < m_r < p
  // T[j] holds the partial sum over chains of length j ending below the
  // current M; update descending so T[j-1] is still the previous row.
  std::vector<i64> T(static_cast<size_t>(r) + 1, 0);
  T[0] = 1 % p;
  for (i64 M = 1; M < p; ++M) {
    const bool odd = (M & 1) != 0;
    for (int j = r; j >= 1; --j) {
      if (T[j - 1] == 0) continue;
      i64 term = pow_mod(inv[M], static_cast<u64>(std::abs(e[j - 1])), p);
      term = mul_mod(T[j - 1], term, p);
      if (e[j - 1] < 0 && odd && term != 0) term = p - term;
      T[j] = add_mod(T[j], term, p);
    }
  }
  return T[r];
}

i64 famzv(const SignedIndex& idx, i64 p) {
  auto inv = inverse_table(p);
  return famzv_dp(idx, p, inv);
}

i64 famzv_naive(const SignedIndex& idx, i64 p) {
  if (p > 200) throw std::invalid_argument("famzv_naive: p above oracle bound 200");
  const auto& e = idx.entries();
  const int r = idx.depth();
  // Per-level table of sgn^m / m^{|a|}, inverses by Fermat power so the
  // oracle shares no code path with the DP's Euclid/batch route.
  std::vector<std::vector<i64>> term(static_cast<size_t>(r));
  for (int j = 0; j < r; ++j) {
    term[j].assign(static_cast<size_t>(p), 0);
    for (i64 m = 1; m < p; ++m) {
      i64 v = pow_mod(pow_mod(m, static_cast<u64>(std::abs(e[j])), p),
                      static_cast<u64>(p - 2), p);
      if (e[j] < 0 && (m & 1)) v = (p - v) % p;
      term[j][m] = v;
    }
  }
  i64 total = 0;
  auto rec = [&](auto&& self, int level, i64 lo, i64 prod) -> void {
    if (level == r) {
      total = add_mod(total, prod, p);
      return;
    }
    for (i64 m = lo + 1; m < p; ++m)
      self(self, level + 1, m, mul_mod(prod, term[level][m], p));
  };
  rec(rec, 0, 0, 1 % p);
  return total;
}

AdeleVector famzv_adele(const SignedIndex& idx, std::span<const i64> primes,
                        bool parallel) {
  AdeleVector out;
  out.primes.assign(primes.begin(), primes.end());
  out.values.assign(primes.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(primes.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      out.values[i] = famzv(idx, primes[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i)
      out.values[i] = famzv(idx, primes[i]);
  }
  return out;
}

AdeleCompare adele_equal(const AdeleVector& a, const AdeleVector& b, i64 threshold) {
  if (a.primes != b.primes)
    throw std::invalid_argument("adele_equal: mismatched prime ranges");
  AdeleCompare cmp;
  for (size_t i = 0; i < a.primes.size(); ++i)
    if (a.values[i] != b.values[i]) cmp.differing.push_back(a.primes[i]);
  cmp.equal_in_ring = true;
  for (i64 p : cmp.differing)
    if (p >= threshold) cmp.equal_in_ring = false;
  return cmp;
}

ZetaCache::ZetaCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("index") ||
        !doc.contains("p") || !doc.contains("value") ||
        !doc["index"].is_array() || !doc["p"].is_number_integer() ||
        !doc["value"].is_number_integer()) {
      ++invalid_lines_;
      continue;
    }
    std::vector<int> index;
    bool ok = true;
    for (const auto& v : doc["index"]) {
      if (!v.is_number_integer() || v.get<i64>() == 0) { ok = false; break; }
      index.push_back(v.get<int>());
    }
    if (!ok || index.empty()) {
      ++invalid_lines_;
      continue;
    }
    entries_[{std::move(index), doc["p"].get<i64>()}] = doc["value"].get<i64>();
  }
}

bool ZetaCache::lookup(const std::vector<int>& index, i64 p, i64& value) const {
  std::lock_guard lock(mu_);
  auto it = entries_.find({index, p});
  if (it == entries_.end()) return false;
  value = it->second;
  return true;
}

void ZetaCache::store(const std::vector<int>& index, i64 p, i64 value) {
  std::lock_guard lock(mu_);
  auto [it, inserted] = entries_.insert({{index, p}, value});
  if (!inserted) return;
  std::ofstream out(path_, std::ios::app);
  if (!out) return;
  nlohmann::json rec{{"index", index}, {"p", p}, {"value", value}};
  out << rec.dump() << '\n';
}

ZetaEvaluator::ZetaEvaluator(i64 p, ZetaCache* cache)
    : p_(p), inv_(inverse_table(p)), cache_(cache) {}

i64 ZetaEvaluator::value(const SignedIndex& idx) {
  auto it = memo_.find(idx.entries());
  if (it != memo_.end()) return it->second;
  i64 v;
  if (cache_ && cache_->lookup(idx.entries(), p_, v)) {
    memo_.emplace(idx.entries(), v);
    return v;
  }
  v = famzv_dp(idx, p_, inv_);
  ++evals_;
  memo_.emplace(idx.entries(), v);
  if (cache_) cache_->store(idx.entries(), p_, v);
  return v;
}

}  // namespace famzv
