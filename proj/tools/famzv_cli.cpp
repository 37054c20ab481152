// famzv: compute finite alternating multiple zeta values mod p and verify
// the congruence identities. Exit codes: 0 pass, 1 verification failure,
// 2 usage or IO error.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "famzv/identities.hpp"
#include "famzv/quad.hpp"
#include "famzv/series.hpp"
#include "famzv/zeta.hpp"

using namespace famzv;

namespace {

// "LO..HI" -> odd primes in [LO, HI]. Throws CLI::ValidationError on
// malformed ranges; an empty result is a usage error (exit 2).
std::vector<i64> parse_prime_range(const std::string& text) {
  auto sep = text.find("..");
  if (sep == std::string::npos)
    throw CLI::ValidationError("--primes", "expected LO..HI, got '" + text + "'");
  i64 lo = 0, hi = 0;
  try {
    lo = std::stoll(text.substr(0, sep));
    hi = std::stoll(text.substr(sep + 2));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--primes", "expected LO..HI, got '" + text + "'");
  }
  if (lo < 2 || hi < lo || hi > kMaxPrime)
    throw CLI::ValidationError("--primes",
                               "need 2 <= LO <= HI <= " + std::to_string(kMaxPrime));
  auto primes = odd_primes_in_range(lo, hi);
  if (primes.empty())
    throw CLI::ValidationError("--primes", "no odd primes in " + text);
  return primes;
}

struct OutputOpts {
  std::string json_path;
  std::string csv_path;
};

void add_output_flags(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("--json", out.json_path, "Write the JSON report to this path");
  cmd->add_option("--csv", out.csv_path, "Write the per-prime CSV to this path");
}

// Returns the process exit code for a finished verification.
int finish(const VerificationReport& report, const OutputOpts& out) {
  try {
    if (!out.json_path.empty()) report_write(report, out.json_path, "json");
    if (!out.csv_path.empty()) report_write(report, out.csv_path, "csv");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  auto failures = report.failing_primes();
  auto info = report.informational_failures();
  std::printf("%s%s%s: %zu primes, %zu judged failures, %zu informational; %s\n",
              report.name.c_str(), report.convention.empty() ? "" : " ",
              report.convention.c_str(), report.verdicts.size(), failures.size(),
              info.size(), failures.empty() ? "PASS" : "FAIL");
  if (!failures.empty()) {
    std::printf("failing primes:");
    for (i64 p : failures) std::printf(" %lld", static_cast<long long>(p));
    std::printf("\n");
  }
  return failures.empty() ? 0 : 1;
}

std::string default_cache_path() {
  const char* dir = std::getenv("FAMZV_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::string(dir) + "/zeta_cache.jsonl";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite alternating multiple zeta values: evaluation and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();  // app-level flags may follow the subcommand

  bool serial = false;
  app.add_flag("--serial", serial, "Disable per-prime parallelism");
  std::string cache_path = default_cache_path();
  app.add_option("--cache", cache_path,
                 "Line-JSON zeta cache file (default: $FAMZV_CACHE_DIR/zeta_cache.jsonl)");

  // ---- zeta ----
  auto* zeta_cmd = app.add_subcommand("zeta", "Evaluate one FAMZV over a prime range");
  std::string zeta_index, zeta_primes;
  bool zeta_naive = false;
  zeta_cmd->add_option("index", zeta_index, "Signed index literal, e.g. 1,-2,3")->required();
  zeta_cmd->add_option("--primes", zeta_primes, "Prime range LO..HI (odd primes used)")->required();
  zeta_cmd->add_flag("--naive", zeta_naive, "Use the nested-sum oracle (p <= 200)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "Verify an identity over a prime range");
  verify->require_subcommand(1);

  struct {
    int n = 0, m = 0, s = 1, t = 1, weight = 4;
    std::string primes, mode = "symbolic", convention = "corrected";
    std::string alpha, beta;
    u64 seed = 0;
    bool has_seed = false;
  } v;
  OutputOpts out;

  auto add_common = [&](CLI::App* cmd, bool with_mode = true) {
    cmd->add_option("--primes", v.primes, "Prime range LO..HI")->required();
    if (with_mode) {
      cmd->add_option("--mode", v.mode, "symbolic | evaluate")
          ->check(CLI::IsMember({"symbolic", "evaluate"}));
      cmd->add_option("--seed", v.seed, "RNG seed (required with --mode evaluate)")
          ->each([&](const std::string&) { v.has_seed = true; });
    }
    add_output_flags(cmd, out);
  };

  auto* main_cmd = verify->add_subcommand("main", "Two-parameter sum formula, alternating");
  main_cmd->add_option("--n", v.n)->required();
  main_cmd->add_option("--m", v.m)->required();
  add_common(main_cmd);

  auto* kamano_cmd = verify->add_subcommand("kamano", "Classic (unsigned) sum formula");
  kamano_cmd->add_option("--n", v.n)->required();
  kamano_cmd->add_option("--m", v.m)->required();
  add_common(kamano_cmd);

  auto* general_cmd = verify->add_subcommand("general", "Block identity for (s,t) shuffles");
  general_cmd->add_option("--s", v.s)->required();
  general_cmd->add_option("--t", v.t)->required();
  general_cmd->add_option("--n", v.n)->required();
  general_cmd->add_option("--m", v.m)->required();
  general_cmd->add_option("--convention", v.convention, "corrected | printed | resolve")
      ->check(CLI::IsMember({"corrected", "printed", "resolve"}));
  add_common(general_cmd);

  auto* cor1_cmd = verify->add_subcommand("cor1", "w-weighted sum formula");
  cor1_cmd->add_option("--n", v.n)->required();
  cor1_cmd->add_option("--m", v.m)->required();
  add_common(cor1_cmd);

  auto* cor2_cmd = verify->add_subcommand("cor2", "J-weighted sum formula");
  cor2_cmd->add_option("--n", v.n)->required();
  cor2_cmd->add_option("--m", v.m)->required();
  add_common(cor2_cmd);

  auto* rev_cmd = verify->add_subcommand("reversal", "Reversal formula up to a weight bound");
  rev_cmd->add_option("--weight", v.weight, "Weight bound, <= 6")->required();
  add_common(rev_cmd);

  auto* lemma2_cmd = verify->add_subcommand("lemma2", "Product congruence Lp(Li*Li)");
  lemma2_cmd->add_option("--alpha", v.alpha, "Signed index literal")->required();
  lemma2_cmd->add_option("--beta", v.beta, "Signed index literal")->required();
  add_common(lemma2_cmd, false);

  // ---- quadcheck ----
  auto* quad_cmd = app.add_subcommand(
      "quadcheck", "Compare the iterated-integral and series evaluations");
  int quad_weight = 3;
  double quad_z = 0.5, quad_tol = 1e-6;
  std::string quad_json;
  quad_cmd->add_option("--weight", quad_weight, "Weight bound, <= 3");
  quad_cmd->add_option("--z", quad_z, "Evaluation point in (0, 0.75]");
  quad_cmd->add_option("--tol", quad_tol, "Agreement tolerance");
  quad_cmd->add_option("--json", quad_json, "Write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::unique_ptr<ZetaCache> cache;
    if (!cache_path.empty()) cache = std::make_unique<ZetaCache>(cache_path);

    if (*zeta_cmd) {
      auto idx = SignedIndex::parse(zeta_index);
      auto primes = parse_prime_range(zeta_primes);
      if (zeta_naive) {
        for (i64 p : primes)
          std::printf("%lld %lld\n", static_cast<long long>(p),
                      static_cast<long long>(famzv_naive(idx, p)));
      } else {
        auto vec = famzv_adele(idx, primes, !serial);
        for (size_t i = 0; i < vec.primes.size(); ++i)
          std::printf("%lld %lld\n", static_cast<long long>(vec.primes[i]),
                      static_cast<long long>(vec.values[i]));
      }
      return 0;
    }

    if (*quad_cmd) {
      if (quad_weight < 1 || quad_weight > 3)
        throw std::invalid_argument("quadcheck: --weight must be in [1, 3]");
      double max_diff = 0;
      bool ok = true;
      for (const auto& idx : all_signed_indices_up_to_weight(quad_weight)) {
        double series = li_numeric(idx, quad_z, 1e-10);
        double integral = iterint_numeric(idx, quad_z, 48);
        double diff = std::abs(series - integral);
        max_diff = std::max(max_diff, diff);
        std::printf("%-12s series=%.12f integral=%.12f diff=%.3e\n",
                    idx.str().c_str(), series, integral, diff);
        if (diff >= quad_tol) ok = false;
      }
      std::printf("quadcheck: max diff %.3e, tolerance %.3e; %s\n", max_diff,
                  quad_tol, ok ? "PASS" : "FAIL");
      if (!quad_json.empty()) {
        nlohmann::json doc{{"name", "quadcheck"},
                           {"params", {{"weight", quad_weight}, {"z", quad_z}, {"tol", quad_tol}}},
                           {"max_diff", max_diff},
                           {"pass", ok}};
        FILE* f = std::fopen(quad_json.c_str(), "wb");
        if (!f) throw std::runtime_error("cannot open " + quad_json);
        auto text = doc.dump(2);
        std::fwrite(text.data(), 1, text.size(), f);
        std::fputc('\n', f);
        std::fclose(f);
      }
      return ok ? 0 : 1;
    }

    // verify subcommands
    if (v.mode == "evaluate" && !v.has_seed)
      throw std::invalid_argument("--mode evaluate requires --seed");
    VerifyOptions opts;
    opts.judge = v.mode == "evaluate" ? JudgeMode::evaluate : JudgeMode::symbolic;
    opts.has_seed = v.has_seed;
    opts.seed = v.seed;
    opts.parallel = !serial;
    opts.cache = cache.get();
    auto primes = parse_prime_range(v.primes);

    if (*main_cmd || *kamano_cmd) {
      auto mode = *main_cmd ? MainMode::alternating : MainMode::classic;
      return finish(verify_main(v.n, v.m, primes, mode, opts), out);
    }
    if (*general_cmd) {
      if (v.convention == "resolve") {
        auto verdict = resolve_sign_convention(v.s, v.t, v.n, v.m, primes, opts);
        std::printf("resolved convention: %s\n", verdict.c_str());
        return verdict == "none" ? 1 : 0;
      }
      auto conv = v.convention == "printed" ? QConvention::printed
                                            : QConvention::corrected;
      return finish(verify_general(v.s, v.t, v.n, v.m, primes, conv, opts), out);
    }
    if (*cor1_cmd) return finish(verify_corollary(1, v.n, v.m, primes, opts), out);
    if (*cor2_cmd) return finish(verify_corollary(2, v.n, v.m, primes, opts), out);
    if (*rev_cmd) return finish(verify_reversal(v.weight, primes, opts), out);
    if (*lemma2_cmd)
      return finish(verify_lemma2(SignedIndex::parse(v.alpha),
                                  SignedIndex::parse(v.beta), primes, !serial),
                    out);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
