#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "antibch/error.hpp"
#include "antibch/json_io.hpp"
#include "antibch/parallel.hpp"
#include "antibch/verify.hpp"

using namespace antibch;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct Config {
  std::string format = "json";
  std::string output;
  std::optional<unsigned> threads;
  std::uint64_t seed = 7;
  Budgets budgets;
  std::uint64_t subset_budget = kDefaultSubsetBudget;
  std::uint64_t q = 0, delta = 2, k = 0, l = 0, p = 0, wmax = 0;
  std::uint32_t m = 1;
  std::int64_t b = 1;
  std::string suite = "all";
};

void emit(const Config& cfg, const Json& j, const std::string& csv_override = "") {
  std::string text;
  if (cfg.format == "json") text = j.dump(2) + "\n";
  else if (cfg.format == "table") text = render_table(j);
  else text = csv_override.empty() ? render_csv(j) : csv_override;
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + cfg.output);
    out << text;
  }
}

void add_code_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--q", cfg.q, "field size")->required();
  sub->add_option("--m", cfg.m, "extension degree, n = q^m + 1")->required();
  sub->add_option("--delta", cfg.delta, "designed distance")->required();
  sub->add_option("--b", cfg.b, "first exponent of the window")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antiprimitive BCH codes: cosets, codes, distance certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--output", cfg.output, "write to this file instead of stdout");
  app.add_option("--threads", cfg.threads, "worker threads (default: ANTIBCH_THREADS, else 1)")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized property checks");
  app.add_option("--codeword-budget", cfg.budgets.codewords, "codewords per exhaustive search")->check(CLI::PositiveNumber);
  app.add_option("--support-budget", cfg.budgets.support_leaves, "support-search leaves")->check(CLI::PositiveNumber);
  app.add_option("--subcode-budget", cfg.budgets.subcode_codewords, "codewords in reflection-invariant subcodes")
      ->check(CLI::PositiveNumber);
  app.add_option("--subset-budget", cfg.subset_budget, "subsets enumerated by esp/zetterberg")->check(CLI::PositiveNumber);

  auto* cosets = app.add_subcommand("cosets", "cyclotomic cosets modulo q^m + 1");
  cosets->add_option("--q", cfg.q)->required();
  cosets->add_option("--m", cfg.m)->required();
  auto* code = app.add_subcommand("code", "code descriptor");
  add_code_options(code, cfg);
  auto* distance = app.add_subcommand("distance", "minimum-distance certificate");
  add_code_options(distance, cfg);
  auto* verify = app.add_subcommand("verify", "golden cases and property checks");
  verify->add_option("--suite", cfg.suite)->check(CLI::IsMember({"paper-examples", "properties", "all"}));
  auto* esp = app.add_subcommand("esp", "k-subsets of U_{q+1} with sigma_{k,k-l} = 0");
  esp->add_option("--q", cfg.q)->required();
  esp->add_option("--k", cfg.k)->required();
  esp->add_option("--l", cfg.l)->required();
  auto* zet = app.add_subcommand("zetterberg", "low-weight counts of the Zetterberg code");
  zet->add_option("--p", cfg.p)->required();
  zet->add_option("--m", cfg.m)->required();
  zet->add_option("--wmax", cfg.wmax)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (cfg.threads) set_thread_count(*cfg.threads);

  try {
    if (*cosets) {
      emit(cfg, to_json(leaders_brute_force(cfg.q, cfg.m)));
    } else if (*code) {
      emit(cfg, to_json(build_code(cfg.q, cfg.m, cfg.delta, cfg.b)));
    } else if (*distance) {
      CertifyOptions opt;
      opt.budgets = cfg.budgets;
      emit(cfg, to_json(certify(build_code(cfg.q, cfg.m, cfg.delta, cfg.b), opt)));
    } else if (*verify) {
      const auto rep = run_verify(cfg.suite, cfg.seed, cfg.budgets);
      emit(cfg, to_json(rep));
      return rep.ok() ? kOk : kVerifyFailed;
    } else if (*esp) {
      const auto bs = block_set(cfg.q, cfg.k, cfg.l, cfg.subset_budget);
      emit(cfg, to_json(bs), blocks_csv(bs));
    } else if (*zet) {
      emit(cfg, to_json(zetterberg_low_weight(cfg.p, cfg.m, cfg.wmax, cfg.subset_budget)));
    }
  } catch (const Error& e) {
    std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::BudgetExceeded: return kBudget;
      case ErrorCode::Internal:
      case ErrorCode::RootCheckFailed: return kVerifyFailed;
      default: return kUsage;
    }
  }
  return kOk;
}
