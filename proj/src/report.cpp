#include "famzv/report.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace famzv {

std::vector<i64> VerificationReport::failing_primes() const {
  std::vector<i64> out;
  for (const auto& v : verdicts)
    if (v.judged && !v.ok) out.push_back(v.prime);
  return out;
}

std::vector<i64> VerificationReport::informational_failures() const {
  std::vector<i64> out;
  for (const auto& v : verdicts)
    if (!v.judged && !v.ok) out.push_back(v.prime);
  return out;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json doc;
  doc["name"] = name;
  doc["params"] = params;
  doc["convention"] = convention;
  std::vector<i64> primes;
  for (const auto& v : verdicts) primes.push_back(v.prime);
  doc["primes"] = primes;
  doc["failures"] = failing_primes();
  doc["informational_failures"] = informational_failures();
  doc["pass"] = pass();
  doc["zeta_evals"] = zeta_evals;
  // elapsed_ms is deliberately not serialized: persisted reports are
  // byte-deterministic for identical inputs and seed.
  doc["cache_warnings"] = cache_warnings;
  if (has_seed) doc["seed"] = seed;
  return doc;
}

std::string VerificationReport::to_csv() const {
  std::string out = "prime,judged,pass\n";
  for (const auto& v : verdicts) {
    out += std::to_string(v.prime);
    out += v.judged ? ",1," : ",0,";
    out += v.ok ? "1\n" : "0\n";
  }
  return out;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& doc) {
  VerificationReport r;
  r.name = doc.at("name").get<std::string>();
  r.params = doc.at("params");
  r.convention = doc.at("convention").get<std::string>();
  auto primes = doc.at("primes").get<std::vector<i64>>();
  auto failures = doc.at("failures").get<std::vector<i64>>();
  auto info_failures = doc.value("informational_failures", std::vector<i64>{});
  for (i64 p : primes) {
    PrimeVerdict v;
    v.prime = p;
    bool failed = std::find(failures.begin(), failures.end(), p) != failures.end();
    bool info = std::find(info_failures.begin(), info_failures.end(), p) != info_failures.end();
    v.judged = !info;
    v.ok = !failed && !info;
    r.verdicts.push_back(v);
  }
  r.zeta_evals = doc.value("zeta_evals", std::size_t{0});
  r.cache_warnings = doc.value("cache_warnings", std::size_t{0});
  if (doc.contains("seed")) {
    r.has_seed = true;
    r.seed = doc["seed"].get<u64>();
  }
  return r;
}

void report_write(const VerificationReport& report, const std::string& path,
                  const std::string& format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("report_write: cannot open " + path);
  if (format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else if (format == "csv") {
    out << report.to_csv();
  } else {
    throw std::invalid_argument("report_write: unknown format " + format);
  }
  if (!out) throw std::runtime_error("report_write: write failed for " + path);
}

}  // namespace famzv
