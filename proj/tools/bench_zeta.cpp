// Benchmark: per-prime FAMZV evaluation, serial reference vs the
// OpenMP-parallel driver. Prints a small table and the speedup.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "famzv/identities.hpp"
#include "famzv/zeta.hpp"

using namespace famzv;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  i64 hi = argc > 1 ? std::atoll(argv[1]) : 20000;
  if (hi < 5 || hi > kMaxPrime) {
    std::fprintf(stderr, "usage: bench_zeta [max_prime]\n");
    return 2;
  }
  auto primes = odd_primes_in_range(3, hi);
  SignedIndex idx({1, -2, 3});

  std::printf("%-28s %10s %10s %8s\n", "workload", "serial(s)", "parallel(s)",
              "speedup");

  {
    auto t0 = Clock::now();
    auto serial = famzv_adele(idx, primes, false);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto parallel = famzv_adele(idx, primes, true);
    double tp = seconds_since(t0);
    if (serial.values != parallel.values || serial.primes != parallel.primes) {
      std::fprintf(stderr, "bench_zeta: serial/parallel mismatch\n");
      return 1;
    }
    std::printf("%-28s %10.3f %10.3f %7.2fx\n",
                ("zeta(1,-2,3), p<=" + std::to_string(hi)).c_str(), ts, tp,
                ts / tp);
  }

  {
    auto vp = odd_primes_in_range(7, std::min<i64>(hi, 2000));
    VerifyOptions serial_opts, parallel_opts;
    serial_opts.parallel = false;
    auto t0 = Clock::now();
    auto rs = verify_main(2, 2, vp, MainMode::alternating, serial_opts);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto rp = verify_main(2, 2, vp, MainMode::alternating, parallel_opts);
    double tp = seconds_since(t0);
    bool same = rs.verdicts.size() == rp.verdicts.size();
    for (size_t i = 0; same && i < rs.verdicts.size(); ++i)
      same = rs.verdicts[i].prime == rp.verdicts[i].prime &&
             rs.verdicts[i].ok == rp.verdicts[i].ok;
    if (!same || !rs.pass() || !rp.pass()) {
      std::fprintf(stderr, "bench_zeta: verify mismatch\n");
      return 1;
    }
    std::printf("%-28s %10.3f %10.3f %7.2fx\n", "verify main n=2 m=2", ts, tp,
                ts / tp);
  }
  return 0;
}
