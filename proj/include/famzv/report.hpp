#ifndef FAMZV_REPORT_HPP
#define FAMZV_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "famzv/modp.hpp"

namespace famzv {

struct PrimeVerdict {
  i64 prime = 0;
  bool judged = false;  // above the assertion threshold
  bool ok = false;
};

// One verification run: per-prime verdicts in ascending prime order plus
// run metadata. A judged prime that disagrees is a failure; primes below
// the threshold are informational only.
struct VerificationReport {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::string convention;  // empty when not applicable
  std::vector<PrimeVerdict> verdicts;
  std::size_t zeta_evals = 0;
  long long elapsed_ms = 0;
  bool has_seed = false;
  u64 seed = 0;
  std::size_t cache_warnings = 0;

  std::vector<i64> failing_primes() const;
  std::vector<i64> informational_failures() const;
  bool pass() const { return failing_primes().empty(); }

  nlohmann::json to_json() const;
  std::string to_csv() const;  // one row per prime
  static VerificationReport from_json(const nlohmann::json& doc);
};

// format: "json" or "csv". Throws std::runtime_error on IO failure.
void report_write(const VerificationReport& report, const std::string& path,
                  const std::string& format);

}  // namespace famzv

#endif
