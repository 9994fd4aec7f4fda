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

#ifndef QRC_EXPERIMENT_HPP
#define QRC_EXPERIMENT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qrc/linalg.hpp"
#include "qrc/reservoir.hpp"
#include "qrc/tipc.hpp"

namespace qrc {

struct SplitSpec {
  std::size_t washout = 10;
  std::size_t train_end = 80;
  std::size_t test_end = 100;
};

struct ExperimentConfig {
  std::string task = "narma2";  // narma2 | narma5 | narma10 | csv
  std::string csv_path;
  bool normalize_u = false;
  std::size_t length = 100;
  SplitSpec split{};
  bool split_explicit = false;  // csv task defaults to 100/800/1000 when unset
  ReservoirConfig reservoir{};
  int trials = 10;
  double ridge = 0.0;
  std::vector<double> sweep_strengths;  // empty = 0..10
  TipcConfig tipc{};
  std::string tipc_input = "asymmetric";  // asymmetric | symmetric | task
  std::size_t tipc_length = 1100;
  std::string out_dir = "out";
};

ExperimentConfig config_from_json_text(const std::string& text);
ExperimentConfig config_from_json_file(const std::string& path);
std::string config_to_json(const ExperimentConfig& cfg);

struct TrialMetrics {
  double nmse_train = 0.0;
  double nmse_test = 0.0;
  double dtw_test = 0.0;
};

struct RegressionResult {
  RMat features;                  // first trial, all timesteps
  RVec target;                    // aligned regression target, all timesteps
  std::vector<RVec> predictions;  // per trial, all timesteps
  std::vector<TrialMetrics> trials;
  double nmse_mean = 0.0, nmse_std = 0.0;
  double dtw_mean = 0.0, dtw_std = 0.0;
  double mean_predictor_nmse = 0.0;  // constant train-mean prediction on the test window
  double constant_dtw = 0.0;         // DTW of that constant against the test target
  std::size_t n_train = 0, n_test = 0;
  SplitSpec split{};
};

// NARMA tasks: generates the input and the one-step-ahead target, runs the
// reservoir once per trial (trial index mixed into the seed), fits the linear
// readout on the train window, and evaluates on the test window.
RegressionResult run_narma_experiment(const ExperimentConfig& cfg);

// CSV task: same pipeline with (u, y) taken from the file as given.
RegressionResult run_csv_experiment(const ExperimentConfig& cfg);

struct SweepPoint {
  double strength = 0.0;
  double nmse = 0.0;
  double dtw = 0.0;
  double c_tot = 0.0;
  int richness = 0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double spearman_strength_vs_nmse = 0.0;
  double best_strength = 0.0;         // argmin of nmse
  double tipc_argmax_strength = 0.0;  // argmax of c_tot
};

// Runs the NARMA regression and a fixed-seed i.i.d.-input TIPC analysis at
// every sweep strength.
SweepResult run_sweep_experiment(const ExperimentConfig& cfg);

struct TipcRunResult {
  CapacityReport report;
  std::string input_kind;
  std::size_t length = 0;
};

RegressionResult run_task_regression(const ExperimentConfig& cfg,
                                     const std::vector<double>& u,
                                     const std::vector<double>& target,
                                     const SplitSpec& split);

TipcRunResult run_tipc_experiment(const ExperimentConfig& cfg);

// Artifact writers. All writes are atomic (temp file + rename) and contain no
// timestamps, so identical configs and seeds reproduce identical bytes.
// Return the paths written.
std::vector<std::string> write_regression_artifacts(const ExperimentConfig& cfg,
                                                    const RegressionResult& result);
std::vector<std::string> write_sweep_artifacts(const ExperimentConfig& cfg,
                                               const SweepResult& result);
std::vector<std::string> write_tipc_artifacts(const ExperimentConfig& cfg,
                                              const TipcRunResult& result);
std::string write_error_artifact(const std::string& out_dir, const std::string& command,
                                 const std::string& message);

void atomic_write(const std::string& path, const std::string& content);

// Spearman rank correlation with tie-averaged ranks.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace qrc

#endif  // QRC_EXPERIMENT_HPP
