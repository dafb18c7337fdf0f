#pragma once

// The `census` command-line surface. run() is separate from main() so tests can drive it
// in-process and compare emitted bytes.
//
// Exit codes: 0 success, 2 usage error, 3 cap violation, 4 internal inconsistency.

#include <kostant/kostant.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace kostant::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kCap = 3, kInconsistent = 4 };

enum class Format { Json, Csv, Plain };

struct RunConfig {
  Format format = Format::Json;
  std::string cache_path;
  bool verify_cache = false;
  int workers = 1;
  Limits limits;
};

inline Limits limits_from_env() {
  Limits limits;
  auto read = [](const char* name, int& slot) {
    if (const char* env = std::getenv(name)) {
      try {
        slot = std::stoi(env);
      } catch (const std::exception&) {
      }
    }
  };
  read("CENSUS_PERM_CAP", limits.max_perm_degree);
  read("CENSUS_INV_CAP", limits.max_involution_degree);
  read("CENSUS_CELL_CAP", limits.max_cell_degree);
  return limits;
}

inline std::string render(const Json& report, Format format) {
  switch (format) {
    case Format::Csv: return render_csv(report);
    case Format::Plain: return render_plain(report);
    case Format::Json: break;
  }
  return render_json(report);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and Monte Carlo census of consecutive 2143 avoidance in S_n", "census"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  config.workers = default_workers();
  config.limits = limits_from_env();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--cache", config.cache_path, "JSON cache file for exact counts");
  app.add_flag("--verify-cache", config.verify_cache, "Recompute cache hits and fail on mismatch");
  app.add_option("--workers", config.workers, "Worker count (default: CENSUS_WORKERS or hardware)")->check(CLI::PositiveNumber);

  // count
  auto* count = app.add_subcommand("count", "Exact number of consecutive-2143 avoiders");
  std::string count_kind;
  int count_n = 0;
  count->add_option("--kind", count_kind)->required()->check(CLI::IsMember({"perm", "inv"}));
  count->add_option("--n", count_n)->required();

  // windows
  auto* windows = app.add_subcommand("windows", "Permutations avoiding 2143 on the listed blocks");
  int windows_n = 0;
  std::vector<int> windows_blocks;
  windows->add_option("--n", windows_n)->required();
  windows->add_option("--blocks", windows_blocks)->delimiter(',');

  // verify-lemma7
  auto* lemma7 = app.add_subcommand("verify-lemma7", "Totals and violators of one block case");
  int case_id = 0;
  lemma7->add_option("--case", case_id)->required();

  // qstats
  auto* qstats = app.add_subcommand("qstats", "Exact block-event statistics over Q_n");
  int q_n = 0;
  int q_k = 0;
  qstats->add_option("--n", q_n)->required();
  qstats->add_option("--k", q_k)->required();

  // classify
  auto* classify = app.add_subcommand("classify", "Kostant-negativity certificate");
  std::string classify_perm;
  std::string classify_mode = "quick";
  classify->add_option("--perm", classify_perm)->required();
  classify->add_option("--mode", classify_mode)->check(CLI::IsMember({"quick", "cell"}));

  // cell-involution
  auto* cell_inv = app.add_subcommand("cell-involution", "The involution in the left cell");
  std::string cell_perm;
  cell_inv->add_option("--perm", cell_perm)->required();

  // sequence
  auto* sequence = app.add_subcommand("sequence", "Involution or Motzkin numbers");
  std::string seq_name;
  int seq_max = 0;
  sequence->add_option("--name", seq_name)->required()->check(CLI::IsMember({"inv", "motzkin"}));
  sequence->add_option("--max-n", seq_max)->required();

  // asymptotics
  auto* asym = app.add_subcommand("asymptotics", "i_n growth diagnostic table");
  int asym_max = 0;
  asym->add_option("--max-n", asym_max)->required();

  // bound
  auto* bound = app.add_subcommand("bound", "Closed-form bounds");
  std::string bound_which;
  int bound_k = 0;
  std::optional<int> bound_n;
  bound->add_option("--which", bound_which)->required()->check(CLI::IsMember({"theorem3", "lemma6"}));
  bound->add_option("--k", bound_k)->required();
  bound->add_option("--n", bound_n);

  // mc
  auto* mc = app.add_subcommand("mc", "Seeded Monte Carlo density estimate");
  std::string mc_quantity;
  int mc_n = 0;
  std::optional<int> mc_k;
  std::uint64_t mc_trials = 0;
  std::uint64_t mc_seed = 0;
  mc->add_option("--quantity", mc_quantity)->required()->check(CLI::IsMember({"perm", "inv", "q"}));
  mc->add_option("--n", mc_n)->required();
  mc->add_option("--k", mc_k);
  mc->add_option("--trials", mc_trials)->required();
  mc->add_option("--seed", mc_seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  config.format = format == "csv" ? Format::Csv : format == "plain" ? Format::Plain : Format::Json;

  try {
    std::unique_ptr<CountCache> cache;
    if (!config.cache_path.empty()) cache = std::make_unique<CountCache>(config.cache_path);
    Json report;

    if (*count) {
      const bool perm = count_kind == "perm";
      const auto kind = perm ? CountKind::PermAvoiders : CountKind::InvAvoiders;
      // Cap check first so a cached record never masks a cap violation.
      require_degree_at_most(count_n, perm ? config.limits.max_perm_degree : config.limits.max_involution_degree, "count");
      report = cached_count(cache.get(), count_key(kind, count_n, {}), config.verify_cache, [&] {
        return perm ? count_avoiding_permutations(count_n, config.limits, config.workers)
                    : count_avoiding_involutions(count_n, config.limits, config.workers);
      });
    } else if (*windows) {
      std::sort(windows_blocks.begin(), windows_blocks.end());
      windows_blocks.erase(std::unique(windows_blocks.begin(), windows_blocks.end()), windows_blocks.end());
      require_degree_at_most(windows_n, config.limits.max_perm_degree, "windows");
      const auto key = count_key(CountKind::WindowAvoiders, windows_n, {windows_blocks, std::nullopt, std::nullopt});
      report = cached_count(cache.get(), key, config.verify_cache,
                            [&] { return count_window_avoiders(windows_n, windows_blocks, config.limits, config.workers); });
    } else if (*lemma7) {
      report = to_json(verify_case(case_id));
    } else if (*qstats) {
      report = to_json(q_statistics(q_n, q_k, config.limits, config.workers));
    } else if (*classify) {
      const auto w = parse_permutation(classify_perm);
      const auto mode = classify_mode == "cell" ? ClassifyMode::Cell : ClassifyMode::Quick;
      report = Json{{"permutation", to_string(w)}, {"mode", classify_mode}};
      const Json verdict = to_json(classify_kostant(w, mode, config.limits));
      for (const auto& [k, v] : verdict.items()) report[k] = v;
    } else if (*cell_inv) {
      const auto w = parse_permutation(cell_perm);
      const auto [p, q] = rsk(w);
      const auto u = cell_involution(w);
      report = Json{{"permutation", to_string(w)}, {"involution", to_string(u)}, {"cycles", u.cycles()},
                    {"P", to_json(p)}, {"Q", to_json(q)}};
    } else if (*sequence) {
      report = to_json(sequence_table(seq_name == "inv" ? SequenceName::Involutions : SequenceName::Motzkin, seq_max));
    } else if (*asym) {
      report = to_json(asymptotics_table(asym_max));
    } else if (*bound) {
      if (bound_which == "theorem3") {
        const auto value = theorem3_bound(bound_k);
        report = Json{{"which", "theorem3"}, {"k", bound_k}, {"value", to_decimal(value)}, {"approx", to_double(value)}};
      } else {
        if (bound_k < 1) throw Error(ErrorCode::InvalidArgument, "lemma6 needs k >= 1");
        const int n = bound_n.value_or(4 * bound_k * bound_k * bound_k);
        const auto value = lemma6_bound_exact(n, bound_k);
        report = Json{{"which", "lemma6"}, {"k", bound_k}, {"n", n}, {"value", to_decimal(value)}, {"approx", to_double(value)}};
      }
    } else if (*mc) {
      Estimate e;
      if (mc_quantity == "q") {
        if (!mc_k) throw Error(ErrorCode::InvalidArgument, "mc --quantity q needs --k");
        e = estimate_q_membership(mc_n, *mc_k, mc_trials, mc_seed, config.workers);
      } else {
        e = estimate_avoidance(mc_n, mc_quantity == "perm" ? Population::Permutations : Population::Involutions, mc_trials,
                               mc_seed, config.workers);
      }
      report = to_json(e);
    }

    out << render(report, config.format);
    return kOk;
  } catch (const CacheError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::DegreeTooLarge ? kCap : kUsage;
  }
}

}  // namespace kostant::cli
