#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matmeans/campaign.hpp"
#include "matmeans/matrix_io.hpp"

namespace {

using namespace matmeans;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct CampaignCli {
  CampaignConfig config;
  std::vector<std::string> p_set_raw;
  std::vector<std::string> z_grid_raw;

  void resolve() {
    if (!p_set_raw.empty()) {
      config.p_set.clear();
      for (const std::string& p : p_set_raw) {
        if (p == "inf") {
          config.p_set.push_back(kSchattenInf);
        } else {
          config.p_set.push_back(std::stod(p));
        }
      }
    }
    if (!z_grid_raw.empty()) {
      config.z_grid.clear();
      for (const std::string& z : z_grid_raw) config.z_grid.push_back(parse_complex(z));
    }
    if (const char* env = std::getenv("MATMEANS_SEED"))
      config.master_seed = std::strtoull(env, nullptr, 10);
  }
};

void add_campaign_options(CLI::App* cmd, CampaignCli& cli, bool with_checks) {
  if (with_checks)
    cmd->add_option("--checks", cli.config.checks, "check ids to run (default: all proved checks)");
  cmd->add_option("--dims", cli.config.dims, "matrix dimensions");
  cmd->add_option("--t-grid", cli.config.t_grid, "geodesic/exponent parameters, in (0,1)");
  cmd->add_option("--r-grid", cli.config.r_grid, "scale parameters, >= 0");
  cmd->add_option("--s-grid", cli.config.s_grid, "Heron weights, in [0,1]");
  cmd->add_option("--p-set", cli.p_set_raw, "Schatten indices (>= 1, or inf)");
  cmd->add_option("--z-grid", cli.z_grid_raw, "strip points as complex literals, e.g. 0.5+2i");
  cmd->add_option("--trials-per-cell", cli.config.trials_per_cell, "trials per parameter cell");
  cmd->add_option("--master-seed", cli.config.master_seed, "campaign master seed");
  cmd->add_option("--condition-targets", cli.config.condition_targets,
                  "condition-number targets");
  cmd->add_option("--output-path", cli.config.output_path, "result record destination (JSONL)");
  cmd->add_option("--workers", cli.config.workers, "worker threads");
}

int finish_campaign(CampaignCli& cli) {
  cli.resolve();
  CampaignSummary summary = run_campaign(cli.config);
  std::cout << summary_table(summary);
  std::cout << "records: " << summary.output_path << "\n";
  return summary.any_proved_violated ? kExitViolation : kExitOk;
}

int print_result(const CheckResult& result) {
  std::cout << format_record(result, "") << "\n";
  std::cout << result.check_id << ": " << to_string(result.verdict)
            << "  lhs=" << format_double17(result.lhs) << "  rhs=" << format_double17(result.rhs)
            << "  margin=" << format_double17(result.margin) << "\n";
  if (is_proved_check(result.check_id) && result.verdict == Verdict::Violated)
    return kExitViolation;
  return kExitOk;
}

void print_counterexample_cases() {
  for (auto which : {CounterexampleCase::PaperZ, CounterexampleCase::PrintedValuesZ,
                     CounterexampleCase::IdentityZ}) {
    const CheckResult result = reproduce_counterexample(which);
    const MajorizationReport& detail = *result.detail;
    std::cout << "counterexample Z-case " << static_cast<int>(which) << ": "
              << to_string(result.verdict) << "  s(Z^1/2 X Z^1/2)=("
              << format_double17(detail.left[0]) << ", " << format_double17(detail.left[1])
              << ")  s(Z^1/2 Y Z^1/2)=(" << format_double17(detail.right[0]) << ", "
              << format_double17(detail.right[1]) << ")\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matmeans - randomized verification lab for matrix-mean inequalities"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a key-value file");

  CampaignCli verify_cli;
  CLI::App* verify = app.add_subcommand("verify", "run the full proved-inequality campaign");
  add_campaign_options(verify, verify_cli, false);

  CampaignCli sweep_cli;
  CLI::App* sweep = app.add_subcommand("sweep", "run selected checks over user grids");
  add_campaign_options(sweep, sweep_cli, true);

  CampaignCli counter_cli;
  counter_cli.config.checks = {"counterexample", "open_th122"};
  counter_cli.config.output_path = "matmeans_counterexample.jsonl";
  CLI::App* counter = app.add_subcommand(
      "counterexample",
      "reproduce the fixed counterexample and sweep the open trace inequality");
  add_campaign_options(counter, counter_cli, false);

  std::string witness_path;
  CLI::App* replay_cmd = app.add_subcommand("replay", "re-run a check from a witness file");
  replay_cmd->add_option("witness", witness_path, "witness file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(verify)) return finish_campaign(verify_cli);
    if (app.got_subcommand(sweep)) return finish_campaign(sweep_cli);
    if (app.got_subcommand(counter)) {
      print_counterexample_cases();
      return finish_campaign(counter_cli);
    }
    if (app.got_subcommand(replay_cmd)) return print_result(replay(witness_path));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
