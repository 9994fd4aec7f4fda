// Copyright 2026 The artifact authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrc/experiment.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  std::string mode;
  std::int64_t seed = -1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", flags.out_dir, "artifact output directory");
  cmd->add_option("--mode", flags.mode, "reservoir mode")
      ->check(CLI::IsMember({"ensemble", "trajectory", "baseline"}));
  cmd->add_option("--seed", flags.seed, "base RNG seed");
}

qrc::ExperimentConfig load_config(const CommonFlags& flags) {
  qrc::ExperimentConfig cfg;
  if (!flags.config_path.empty()) cfg = qrc::config_from_json_file(flags.config_path);
  if (!flags.out_dir.empty()) cfg.out_dir = flags.out_dir;
  if (!flags.mode.empty()) cfg.reservoir.mode = qrc::mode_from_string(flags.mode);
  if (flags.seed >= 0) cfg.reservoir.seed = static_cast<std::uint64_t>(flags.seed);
  return cfg;
}

void print_written(const std::vector<std::string>& paths) {
  for (const std::string& p : paths) std::printf("wrote %s\n", p.c_str());
}

int run_regression(const qrc::ExperimentConfig& cfg) {
  const qrc::RegressionResult result = cfg.task == "csv" ? qrc::run_csv_experiment(cfg)
                                                         : qrc::run_narma_experiment(cfg);
  print_written(qrc::write_regression_artifacts(cfg, result));
  std::printf("task=%s mode=%s trials=%zu\n", cfg.task.c_str(),
              qrc::to_string(cfg.reservoir.mode).c_str(), result.trials.size());
  std::printf("nmse %.6g +- %.6g (mean predictor %.6g)\n", result.nmse_mean, result.nmse_std,
              result.mean_predictor_nmse);
  std::printf("dtw  %.6g +- %.6g (constant %.6g)\n", result.dtw_mean, result.dtw_std,
              result.constant_dtw);
  return 0;
}

int run_sweep(const qrc::ExperimentConfig& cfg) {
  const qrc::SweepResult result = qrc::run_sweep_experiment(cfg);
  print_written(qrc::write_sweep_artifacts(cfg, result));
  std::printf("sweep points=%zu spearman(strength, nmse)=%.4f\n", result.points.size(),
              result.spearman_strength_vs_nmse);
  std::printf("best strength (nmse) = %g, capacity argmax = %g\n", result.best_strength,
              result.tipc_argmax_strength);
  return 0;
}

int run_tipc(const qrc::ExperimentConfig& cfg) {
  const qrc::TipcRunResult result = qrc::run_tipc_experiment(cfg);
  print_written(qrc::write_tipc_artifacts(cfg, result));
  const qrc::CapacityReport& r = result.report;
  std::printf("tipc input=%s length=%zu rank=%d window=%zu\n", result.input_kind.c_str(),
              result.length, r.rank, r.window);
  std::printf("c_tot=%.6g (invariant %.6g, variant %.6g) richness=%d threshold=%.3g\n", r.c_tot,
              r.c_time_invariant, r.c_time_variant, r.richness, r.threshold);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measured quantum reservoir simulator and analysis toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string narma_task;
  int narma_trials = 0;

  CLI::App* narma = app.add_subcommand("narma", "NARMA benchmark regression");
  add_common(narma, flags);
  narma->add_option("--task", narma_task, "narma2 | narma5 | narma10")
      ->check(CLI::IsMember({"narma2", "narma5", "narma10"}));
  narma->add_option("--trials", narma_trials, "number of reseeded trials")
      ->check(CLI::PositiveNumber);

  CLI::App* csv = app.add_subcommand("csv", "regression on an external t,u,y series");
  add_common(csv, flags);

  CLI::App* sweep = app.add_subcommand("sweep", "coupling-strength sweep with capacity totals");
  add_common(sweep, flags);

  CLI::App* tipc = app.add_subcommand("tipc", "temporal information processing capacity");
  add_common(tipc, flags);

  CLI::App* baseline = app.add_subcommand("baseline", "unmeasured damped-reservoir regression");
  add_common(baseline, flags);
  baseline->add_option("--task", narma_task, "narma2 | narma5 | narma10")
      ->check(CLI::IsMember({"narma2", "narma5", "narma10"}));
  baseline->add_option("--trials", narma_trials, "number of reseeded trials")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  std::string out_dir = flags.out_dir.empty() ? "out" : flags.out_dir;
  try {
    qrc::ExperimentConfig cfg = load_config(flags);
    out_dir = cfg.out_dir;
    if (narma->parsed()) {
      if (!narma_task.empty()) cfg.task = narma_task;
      if (narma_trials > 0) cfg.trials = narma_trials;
      if (cfg.task == "csv") throw std::runtime_error("narma command needs a NARMA task");
      return run_regression(cfg);
    }
    if (csv->parsed()) {
      cfg.task = "csv";
      return run_regression(cfg);
    }
    if (sweep->parsed()) return run_sweep(cfg);
    if (tipc->parsed()) return run_tipc(cfg);
    if (baseline->parsed()) {
      if (!narma_task.empty()) cfg.task = narma_task;
      if (narma_trials > 0) cfg.trials = narma_trials;
      cfg.reservoir.mode = qrc::Mode::baseline;
      if (cfg.task == "csv") throw std::runtime_error("baseline command needs a NARMA task");
      return run_regression(cfg);
    }
    return 1;
  } catch (const std::exception& e) {
    const std::string path = qrc::write_error_artifact(out_dir, command, e.what());
    std::fprintf(stderr, "error: %s\nwrote %s\n", e.what(), path.c_str());
    return 1;
  }
}
