#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "famzv/zeta.hpp"

using namespace famzv;

// Values frozen from an independent implementation of the defining sum.
TEST_CASE("famzv frozen oracle values") {
  CHECK(famzv::famzv(SignedIndex({1, 1}), 7) == 0);
  CHECK(famzv::famzv(SignedIndex({1, -2}), 11) == 1);
  CHECK(famzv::famzv(SignedIndex({2, 1}), 7) == 4);
  CHECK(famzv::famzv(SignedIndex({1, 2}), 7) == 3);
  CHECK(famzv::famzv(SignedIndex({-1, 3}), 13) == 12);
  CHECK(famzv::famzv(SignedIndex({-2}), 7) == 0);
  CHECK(famzv::famzv(SignedIndex({1, 1, 1}), 11) == 0);
}

TEST_CASE("depth >= p gives the empty sum, depth == p-1 does not vanish") {
  CHECK(famzv::famzv(SignedIndex({1, 1, 1}), 3) == 0);
  CHECK(famzv::famzv(SignedIndex({1, 1, 1, 1}), 3) == 0);
  CHECK(famzv::famzv(SignedIndex({1, 1}), 3) == 2);  // 1/(1*2) = 2 mod 3
}

TEST_CASE("classic single zeta vanishes, depth-two Wolstenholme-type values") {
  for (i64 p : {i64{5}, i64{7}, i64{11}, i64{13}}) {
    for (int k = 1; k <= 4; ++k)
      if (k % (p - 1) != 0) CHECK(famzv::famzv(SignedIndex({k}), p) == 0);
    // zeta_A(1,1) = 0 for p > 3 (it's (H^2 - H^(2))/2 with both zero).
    CHECK(famzv::famzv(SignedIndex({1, 1}), p) == 0);
  }
}

TEST_CASE("famzv matches famzv_naive exhaustively, weight <= 4") {
  std::vector<i64> primes{3, 5, 7, 11, 13};
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j + 1 <= 4; ++j)
      for (const auto& idx : enumerate_S(i, j, true))
        for (i64 p : primes) CHECK(famzv::famzv(idx, p) == famzv_naive(idx, p));
}

TEST_CASE("famzv matches famzv_naive on random deeper indices") {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> entry(1, 4), depth(1, 5), coin(0, 1);
  std::vector<i64> primes{3, 5, 7, 11, 13, 17, 19, 23};
  std::uniform_int_distribution<size_t> pick(0, primes.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> e(depth(rng));
    for (auto& x : e) x = coin(rng) ? entry(rng) : -entry(rng);
    SignedIndex idx(e);
    i64 p = primes[pick(rng)];
    CHECK(famzv::famzv(idx, p) == famzv_naive(idx, p));
  }
}

TEST_CASE("famzv_adele serial equals parallel") {
  auto primes = odd_primes_in_range(3, 500);
  SignedIndex idx({1, -2, 1});
  auto a = famzv_adele(idx, primes, false);
  auto b = famzv_adele(idx, primes, true);
  CHECK(a.primes == b.primes);
  CHECK(a.values == b.values);
}

TEST_CASE("adele_equal thresholds") {
  AdeleVector a{{3, 5, 7, 11}, {1, 2, 3, 4}};
  AdeleVector b{{3, 5, 7, 11}, {2, 2, 3, 4}};
  auto cmp = adele_equal(a, b, 5);
  CHECK(cmp.equal_in_ring);
  CHECK(cmp.differing == std::vector<i64>{3});
  cmp = adele_equal(a, b, 3);
  CHECK_FALSE(cmp.equal_in_ring);
}

TEST_CASE("ZetaCache round trip and invalid-line tolerance") {
  auto path = std::filesystem::temp_directory_path() / "famzv_cache_test.jsonl";
  std::filesystem::remove(path);
  {
    ZetaCache cache(path.string());
    cache.store({1, -2}, 11, 1);
    cache.store({2, 1}, 7, 4);
  }
  {
    FILE* f = std::fopen(path.string().c_str(), "a");
    std::fputs("this is not json\n", f);
    std::fputs("{\"index\":[1],\"p\":\"oops\"}\n", f);
    std::fclose(f);
  }
  ZetaCache cache(path.string());
  CHECK(cache.size() == 2);
  CHECK(cache.invalid_lines() == 2);
  i64 v = -1;
  CHECK(cache.lookup({1, -2}, 11, v));
  CHECK(v == 1);
  CHECK_FALSE(cache.lookup({1, -2}, 13, v));
  std::filesystem::remove(path);
}

TEST_CASE("ZetaEvaluator memoizes") {
  ZetaEvaluator ev(101);
  SignedIndex idx({1, -2, 3});
  i64 first = ev.value(idx);
  CHECK(ev.evals() == 1);
  CHECK(ev.value(idx) == first);
  CHECK(ev.evals() == 1);
  CHECK(first == famzv::famzv(idx, 101));
}
