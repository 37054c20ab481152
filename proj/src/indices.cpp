#include "famzv/indices.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace famzv {

SignedIndex::SignedIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("SignedIndex: empty");
  for (int e : entries_)
    if (e == 0) throw std::invalid_argument("SignedIndex: zero entry");
}

int SignedIndex::weight() const {
  int w = 0;
  for (int e : entries_) w += std::abs(e);
  return w;
}

int SignedIndex::sign() const {
  int s = 1;
  for (int e : entries_)
    if (e < 0) s = -s;
  return s;
}

SignedIndex SignedIndex::reversed() const {
  return SignedIndex(std::vector<int>(entries_.rbegin(), entries_.rend()));
}

SignedIndex SignedIndex::concat(const SignedIndex& other) const {
  std::vector<int> e = entries_;
  e.insert(e.end(), other.entries_.begin(), other.entries_.end());
  return SignedIndex(std::move(e));
}

SignedIndex SignedIndex::parse(std::string_view text) {
  std::vector<int> entries;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("SignedIndex::parse: bad entry '" + std::string(tok) + "'");
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return SignedIndex(std::move(entries));
}

std::string SignedIndex::str() const {
  std::string out;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

namespace {

// Positive compositions of total into parts parts, lexicographic.
void positive_compositions(int parts, int total, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (total >= 1) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    cur.push_back(first);
    positive_compositions(parts - 1, total - first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SignedIndex> enumerate_S(int i, int j, bool signed_mode) {
  if (i < 0 || j < 0) throw std::invalid_argument("enumerate_S: negative parameter");
  const int depth = i + 1;
  const int weight = i + j + 1;
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  positive_compositions(depth, weight, cur, comps);

  std::vector<SignedIndex> out;
  if (!signed_mode) {
    out.reserve(comps.size());
    for (auto& c : comps) out.emplace_back(c);
    return out;
  }
  out.reserve(comps.size() << depth);
  for (auto& c : comps) {
    // Sign patterns counted in binary, + (bit 0) before - (bit 1).
    for (unsigned mask = 0; mask < (1u << depth); ++mask) {
      std::vector<int> e(c);
      for (int k = 0; k < depth; ++k)
        if (mask & (1u << k)) e[k] = -e[k];
      out.emplace_back(std::move(e));
    }
  }
  return out;
}

std::vector<std::vector<int>> enumerate_compositions(int length, int total) {
  if (length < 1 || total < 0)
    throw std::invalid_argument("enumerate_compositions: need length >= 1, total >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(length), 0);
  // Lexicographic recursion over nonnegative parts.
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == length - 1) {
      cur[slot] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[slot] = v;
      self(self, slot + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

std::vector<Shuffle> enumerate_shuffles(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("enumerate_shuffles: need s, t >= 1");
  if (s + t > 12) throw std::invalid_argument("enumerate_shuffles: s+t above bound 12");
  const int n = s + t;
  std::vector<Shuffle> out;
  // Choose the image positions of the first block; both blocks stay ordered.
  std::vector<int> choice(static_cast<size_t>(s));
  auto rec = [&](auto&& self, int k, int next) -> void {
    if (k == s) {
      Shuffle sh;
      sh.s = s;
      sh.t = t;
      sh.pos.assign(static_cast<size_t>(n), 0);
      std::vector<bool> used(static_cast<size_t>(n) + 1, false);
      for (int a = 0; a < s; ++a) {
        sh.pos[a] = choice[a];
        used[choice[a]] = true;
      }
      int b = s;
      for (int v = 1; v <= n; ++v)
        if (!used[v]) sh.pos[b++] = v;
      out.push_back(std::move(sh));
      return;
    }
    for (int v = next; v <= n - (s - 1 - k); ++v) {
      choice[k] = v;
      self(self, k + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

int initial_one_run(const SignedIndex& idx) {
  int run = 0;
  for (int e : idx.entries()) {
    if (std::abs(e) != 1) break;
    ++run;
  }
  return std::min(run, idx.depth() - 1);
}

}  // namespace famzv
