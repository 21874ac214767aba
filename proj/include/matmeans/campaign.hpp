#pragma once

#include <map>
#include <string>
#include <vector>

#include "matmeans/checks.hpp"

namespace matmeans {

/// Grids and execution knobs for a randomized verification campaign. Trials
/// derive their random streams from (master_seed, canonical trial index), so
/// results are independent of scheduling and worker count.
struct CampaignConfig {
  std::vector<std::string> checks;  // empty selects every proved check
  std::vector<int> dims{2, 3, 5, 8};
  std::vector<double> t_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> r_grid{0.0, 0.5, 1.0, 3.0};
  std::vector<double> s_grid{0.5};
  std::vector<double> p_set{1.0, 2.0, kSchattenInf};
  std::vector<Complex> z_grid;  // empty selects the default strip grid
  int trials_per_cell = 5;
  uint64_t master_seed = 42;
  std::vector<double> condition_targets{10.0, 1e3, 1e6};
  std::string output_path = "matmeans_results.jsonl";
  int workers = 1;
  std::vector<int> m_list{2, 3};  // matrix-tuple sizes for multi-matrix checks
};

struct CheckStats {
  long trials = 0;
  long holds = 0;
  long equality = 0;
  long violated = 0;
  double min_margin = std::numeric_limits<double>::infinity();
};

struct CampaignSummary {
  std::map<std::string, CheckStats> per_check;
  long total = 0;
  double wall_seconds = 0.0;
  bool any_proved_violated = false;
  std::string output_path;
};

/// Every check whose inequality the source material proves; these gate the
/// campaign exit status. pnorm_heron executions at p = inf are reported but
/// excluded from gating.
const std::vector<std::string>& proved_checks();
bool is_proved_check(const std::string& id);

/// All check ids run_campaign understands.
const std::vector<std::string>& all_checks();

/// Default strip grid: Re in {0.25, 0.3, ..., 0.75} x Im in {0, +-0.5, +-2, +-8}.
std::vector<Complex> default_z_grid();

/// Executes every (check, cell, trial), writes one record per execution to
/// config.output_path (plus a witness file per VIOLATED verdict), and returns
/// per-check statistics. Records are written in canonical order, so identical
/// configs produce byte-identical streams regardless of worker count.
CampaignSummary run_campaign(const CampaignConfig& config);

/// Re-executes the exact check recorded in a witness file.
CheckResult replay(const std::string& witness_path);

/// Single dispatch point shared by campaigns and replay: run `check_id` on
/// explicit input matrices.
CheckResult dispatch_check(const std::string& check_id, const std::vector<Matrix>& inputs,
                           const TrialSpec& spec);

std::string summary_table(const CampaignSummary& summary);

}  // namespace matmeans
