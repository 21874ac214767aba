#include "matmeans/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "matmeans/matrix_io.hpp"
#include "matmeans/sampler.hpp"

namespace matmeans {

namespace {

enum class InputShape { Pair, FurutaPair, Tuple, StripPair, Fixed };

struct CheckInfo {
  InputShape shape;
  bool uses_t = false;
  bool uses_r = false;
  bool uses_p = false;
  bool uses_z = false;
  bool uses_m = false;
};

const std::map<std::string, CheckInfo>& check_table() {
  static const std::map<std::string, CheckInfo> table = {
      {"pnorm_heron", {InputShape::Pair, true, true, true, false, false}},
      {"log_maj_proposition", {InputShape::Pair, true, false, false, false, false}},
      {"trace_sharp", {InputShape::Pair, true, false, false, false, false}},
      {"strip_trace", {InputShape::StripPair, false, false, false, true, false}},
      {"heinz_sharp_trace", {InputShape::Pair, true, false, false, false, false}},
      {"sharp_square_traces", {InputShape::Pair, true, false, false, false, false}},
      {"cross_traces", {InputShape::Pair, true, false, false, false, false}},
      {"furuta_implication", {InputShape::FurutaPair, true, false, false, false, false}},
      {"det_audenaert", {InputShape::Pair, true, false, false, false, false}},
      {"det_power_mean", {InputShape::Pair, true, false, false, false, false}},
      {"qnorm_infinity", {InputShape::Tuple, true, false, false, false, true}},
      {"counterexample", {InputShape::Fixed, false, false, false, false, false}},
      {"open_th122", {InputShape::Pair, true, false, false, false, false}},
  };
  return table;
}

struct Task {
  std::string check;
  TrialSpec spec;
};

std::vector<Matrix> materialize_inputs(const Task& task) {
  const CheckInfo& info = check_table().at(task.check);
  const TrialSpec& s = task.spec;
  std::vector<Matrix> inputs;
  switch (info.shape) {
    case InputShape::Pair:
    case InputShape::StripPair: {
      for (uint64_t stream = 0; stream < 2; ++stream) {
        SamplerConfig cfg{s.n, s.condition_target, derive_seed(s.seed, stream)};
        inputs.push_back(random_spd(cfg).matrix());
      }
      break;
    }
    case InputShape::FurutaPair: {
      SamplerConfig cfg{s.n, s.condition_target, derive_seed(s.seed, 0)};
      auto [a, b] = random_furuta_pair(cfg, s.t);
      inputs.push_back(a.matrix());
      inputs.push_back(b.matrix());
      break;
    }
    case InputShape::Tuple: {
      for (int i = 0; i < s.m; ++i) {
        SamplerConfig cfg{s.n, s.condition_target, derive_seed(s.seed, static_cast<uint64_t>(i))};
        inputs.push_back(random_spd(cfg).matrix());
      }
      break;
    }
    case InputShape::Fixed:
      inputs = counterexample_inputs(static_cast<CounterexampleCase>(s.seed));
      break;
  }
  return inputs;
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void validate_config(const CampaignConfig& config, const std::vector<std::string>& checks) {
  if (config.trials_per_cell < 1) fail(ErrorCode::ConfigInvalid, "trials_per_cell must be >= 1");
  if (config.workers < 1) fail(ErrorCode::ConfigInvalid, "workers must be >= 1");
  if (config.dims.empty() || config.t_grid.empty() || config.r_grid.empty() ||
      config.s_grid.empty() || config.p_set.empty() || config.condition_targets.empty() ||
      config.m_list.empty())
    fail(ErrorCode::ConfigInvalid, "grids must be non-empty");
  for (int n : config.dims)
    if (n < 2 || n > 16) fail(ErrorCode::ConfigInvalid, "dimension " + std::to_string(n));
  for (double t : config.t_grid)
    if (!(t > 0.0 && t < 1.0))
      fail(ErrorCode::ConfigInvalid, "campaign t values must lie strictly inside (0, 1)");
  for (double r : config.r_grid)
    if (!(r >= 0.0)) fail(ErrorCode::ConfigInvalid, "negative r");
  for (double p : config.p_set)
    if (!(p >= 1.0) && p != kSchattenInf) fail(ErrorCode::ConfigInvalid, "p must be >= 1 or inf");
  for (Complex z : config.z_grid)
    if (z.real() < 0.25 - 1e-12 || z.real() > 0.75 + 1e-12)
      fail(ErrorCode::ConfigInvalid, "z outside the strip");
  for (double kappa : config.condition_targets)
    if (!(kappa >= 1.0)) fail(ErrorCode::ConfigInvalid, "condition target below 1");
  for (int m : config.m_list)
    if (m < 2 || m > 8) fail(ErrorCode::ConfigInvalid, "tuple size " + std::to_string(m));
  for (const std::string& check : checks)
    if (!check_table().count(check)) fail(ErrorCode::ConfigInvalid, "unknown check '" + check + "'");
}

std::vector<Task> build_tasks(const CampaignConfig& config, const std::vector<std::string>& checks) {
  const std::vector<int> dims = [&] {
    auto d = config.dims;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
  }();
  const std::vector<double> t_grid = sorted_unique(config.t_grid);
  const std::vector<double> r_grid = sorted_unique(config.r_grid);
  const std::vector<double> p_set = sorted_unique(config.p_set);
  const std::vector<double> cond = sorted_unique(config.condition_targets);
  std::vector<Complex> z_grid = config.z_grid.empty() ? default_z_grid() : config.z_grid;
  std::sort(z_grid.begin(), z_grid.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  std::vector<int> m_list = config.m_list;
  std::sort(m_list.begin(), m_list.end());
  m_list.erase(std::unique(m_list.begin(), m_list.end()), m_list.end());

  std::vector<Task> tasks;
  uint64_t index = 0;
  for (const std::string& check : checks) {
    const CheckInfo& info = check_table().at(check);
    if (info.shape == InputShape::Fixed) {
      for (int variant = 0; variant < 3; ++variant) {
        Task task{check, {}};
        task.spec.n = 2;
        task.spec.m = 3;
        task.spec.seed = static_cast<uint64_t>(variant);
        tasks.push_back(task);
      }
      continue;
    }
    const std::vector<double> ts = info.uses_t ? t_grid : std::vector<double>{0.0};
    const std::vector<double> rs = info.uses_r ? r_grid : std::vector<double>{0.0};
    const std::vector<double> ps = info.uses_p ? p_set : std::vector<double>{0.0};
    const std::vector<Complex> zs = info.uses_z ? z_grid : std::vector<Complex>{Complex(0, 0)};
    const std::vector<int> ms = info.uses_m ? m_list : std::vector<int>{2};
    for (int n : dims)
      for (double kappa : cond)
        for (double t : ts)
          for (double r : rs)
            for (double p : ps)
              for (Complex z : zs)
                for (int m : ms)
                  for (int trial = 0; trial < config.trials_per_cell; ++trial) {
                    Task task{check, {}};
                    task.spec.n = n;
                    task.spec.t = t;
                    task.spec.r = r;
                    task.spec.p = p;
                    task.spec.z = z;
                    task.spec.m = m;
                    task.spec.condition_target = kappa;
                    task.spec.seed = derive_seed(config.master_seed, index);
                    tasks.push_back(task);
                    ++index;
                  }
  }
  return tasks;
}

CheckResult execute_task(const Task& task) {
  CheckResult result = dispatch_check(task.check, materialize_inputs(task), task.spec);
  result.inputs.seed = task.spec.seed;
  result.inputs.condition_target = task.spec.condition_target;
  return result;
}

bool gates_campaign(const CheckResult& result) {
  if (!is_proved_check(result.check_id)) return false;
  if (result.check_id == "pnorm_heron" && result.inputs.p == kSchattenInf) return false;
  return result.verdict == Verdict::Violated;
}

}  // namespace

const std::vector<std::string>& proved_checks() {
  static const std::vector<std::string> list = {
      "cross_traces",    "det_audenaert",      "det_power_mean", "furuta_implication",
      "heinz_sharp_trace", "log_maj_proposition", "pnorm_heron",  "qnorm_infinity",
      "sharp_square_traces", "strip_trace",     "trace_sharp",
  };
  return list;
}

bool is_proved_check(const std::string& id) {
  const auto& list = proved_checks();
  return std::find(list.begin(), list.end(), id) != list.end();
}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> list = [] {
    std::vector<std::string> ids;
    for (const auto& [id, info] : check_table()) ids.push_back(id);
    return ids;
  }();
  return list;
}

std::vector<Complex> default_z_grid() {
  std::vector<Complex> grid;
  for (int i = 0; i <= 10; ++i) {
    const double re = 0.25 + 0.05 * i;
    for (double im : {-8.0, -2.0, -0.5, 0.0, 0.5, 2.0, 8.0}) grid.emplace_back(re, im);
  }
  return grid;
}

CheckResult dispatch_check(const std::string& check_id, const std::vector<Matrix>& inputs,
                           const TrialSpec& spec) {
  const auto it = check_table().find(check_id);
  if (it == check_table().end())
    fail(ErrorCode::ConfigInvalid, "unknown check '" + check_id + "'");
  const CheckInfo& info = it->second;

  CheckResult result;
  if (info.shape == InputShape::Fixed) {
    if (inputs.size() != 3) fail(ErrorCode::ConfigInvalid, "counterexample needs X, Y, Z");
    result = conjugation_weak_majorization(inputs[0], inputs[1], SpdMatrix::from_matrix(inputs[2]));
  } else if (info.shape == InputShape::Tuple) {
    std::vector<SpdMatrix> as;
    for (const Matrix& m : inputs) as.push_back(SpdMatrix::from_matrix(m));
    result = check_qnorm_infinity(as, spec.t);
  } else {
    if (inputs.size() != 2) fail(ErrorCode::ConfigInvalid, check_id + " needs two matrices");
    const SpdMatrix a = SpdMatrix::from_matrix(inputs[0]);
    const SpdMatrix b = SpdMatrix::from_matrix(inputs[1]);
    if (check_id == "pnorm_heron") result = check_pnorm_heron(a, b, spec.t, spec.r, spec.p);
    else if (check_id == "log_maj_proposition") result = check_log_maj_proposition(a, b, spec.t);
    else if (check_id == "trace_sharp") result = check_trace_sharp(a, b, spec.t);
    else if (check_id == "strip_trace") result = check_strip_trace(a, b, spec.z);
    else if (check_id == "heinz_sharp_trace") result = check_heinz_sharp_trace(a, b, spec.t);
    else if (check_id == "sharp_square_traces") result = check_sharp_square_traces(a, b, spec.t);
    else if (check_id == "cross_traces") result = check_cross_traces(a, b, spec.t);
    else if (check_id == "furuta_implication") result = check_furuta_implication(a, b, spec.t);
    else if (check_id == "det_audenaert") result = check_det_audenaert(a, b, spec.t);
    else if (check_id == "det_power_mean") result = check_det_power_mean(a, b, spec.t);
    else if (check_id == "open_th122") result = explore_open_th122(a, b, spec.t);
    else fail(ErrorCode::ConfigInvalid, "unhandled check '" + check_id + "'");
  }
  result.inputs.seed = spec.seed;
  result.inputs.condition_target = spec.condition_target;
  return result;
}

CampaignSummary run_campaign(const CampaignConfig& config) {
  std::vector<std::string> checks = config.checks.empty() ? proved_checks() : config.checks;
  std::sort(checks.begin(), checks.end());
  checks.erase(std::unique(checks.begin(), checks.end()), checks.end());
  validate_config(config, checks);

  const auto start = std::chrono::steady_clock::now();
  const std::vector<Task> tasks = build_tasks(config, checks);
  std::vector<CheckResult> results(tasks.size());

  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      const size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) break;
      try {
        results[i] = execute_task(tasks[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  if (config.workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < config.workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + config.output_path + "'");

  CampaignSummary summary;
  summary.output_path = config.output_path;
  for (size_t i = 0; i < results.size(); ++i) {
    const CheckResult& result = results[i];
    std::string witness_path;
    if (result.verdict == Verdict::Violated) {
      char suffix[48];
      std::snprintf(suffix, sizeof suffix, ".witness-%06zu.txt", i);
      witness_path = config.output_path + suffix;
      std::ofstream wout(witness_path, std::ios::binary | std::ios::trunc);
      if (!wout) fail(ErrorCode::IoError, "cannot open '" + witness_path + "'");
      write_witness(wout, Witness{tasks[i].check, result.inputs, materialize_inputs(tasks[i])});
    }
    out << format_record(result, witness_path) << "\n";

    CheckStats& stats = summary.per_check[result.check_id];
    ++stats.trials;
    ++summary.total;
    switch (result.verdict) {
      case Verdict::Holds: ++stats.holds; break;
      case Verdict::EqualityWithinTol: ++stats.equality; break;
      case Verdict::Violated: ++stats.violated; break;
    }
    stats.min_margin = std::min(stats.min_margin, result.margin);
    if (gates_campaign(result)) summary.any_proved_violated = true;
  }
  out.flush();
  if (!out) fail(ErrorCode::IoError, "write failed for '" + config.output_path + "'");

  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

CheckResult replay(const std::string& witness_path) {
  std::ifstream in(witness_path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + witness_path + "'");
  const Witness witness = read_witness(in);
  return dispatch_check(witness.check_id, witness.matrices, witness.spec);
}

std::string summary_table(const CampaignSummary& summary) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-22s %8s %8s %9s %9s %14s\n", "check", "trials", "holds",
                "equality", "violated", "min margin");
  out << line;
  for (const auto& [check, stats] : summary.per_check) {
    std::snprintf(line, sizeof line, "%-22s %8ld %8ld %9ld %9ld %14.6g\n", check.c_str(),
                  stats.trials, stats.holds, stats.equality, stats.violated, stats.min_margin);
    out << line;
  }
  std::snprintf(line, sizeof line, "%ld executions in %.2f s\n", summary.total,
                summary.wall_seconds);
  out << line;
  return out.str();
}

}  // namespace matmeans
