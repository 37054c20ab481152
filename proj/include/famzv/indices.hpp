#ifndef FAMZV_INDICES_HPP
#define FAMZV_INDICES_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace famzv {

// A finite sequence of nonzero integers. A negative entry -k stands for
// exponent k with alternating sign (the barred entries).
class SignedIndex {
 public:
  explicit SignedIndex(std::vector<int> entries);

  int depth() const { return static_cast<int>(entries_.size()); }
  int weight() const;
  int sign() const;  // product of entry signs, +1 or -1

  SignedIndex reversed() const;
  SignedIndex concat(const SignedIndex& other) const;

  const std::vector<int>& entries() const { return entries_; }

  // Literal syntax: comma-separated nonzero integers, e.g. "1,-2,3".
  static SignedIndex parse(std::string_view text);
  std::string str() const;

  auto operator<=>(const SignedIndex&) const = default;

 private:
  std::vector<int> entries_;
};

// S_{i,j}^sgn (signed=true): all length-(i+1) tuples of nonzero integers
// with total absolute value i+j+1, every sign pattern. S_{i,j} (signed=false):
// the all-positive tuples. Lexicographic on (absolute composition, sign
// pattern), positive before negative per slot.
std::vector<SignedIndex> enumerate_S(int i, int j, bool signed_mode);

// All length-tuples of nonnegative integers summing to total,
// lexicographic. Count = C(total + length - 1, length - 1).
std::vector<std::vector<int>> enumerate_compositions(int length, int total);

// An (s,t)-shuffle: sigma increasing on {1..s} and on {s+1..s+t}.
// pos[j-1] = sigma(j), one-based values.
struct Shuffle {
  int s = 0;
  int t = 0;
  std::vector<int> pos;

  int sigma(int j) const { return pos[j - 1]; }
  bool operator==(const Shuffle&) const = default;
};

std::vector<Shuffle> enumerate_shuffles(int s, int t);

// Length of the maximal initial run of entries with |.| = 1, capped at
// depth-1 (an all-|1| index counts its depth-1 proper prefixes).
int initial_one_run(const SignedIndex& idx);

}  // namespace famzv

#endif
