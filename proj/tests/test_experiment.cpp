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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "qrc/experiment.hpp"
#include "qrc/tasks.hpp"

namespace fs = std::filesystem;
using namespace qrc;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("qrc_exp_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

ExperimentConfig tiny_config() {
  ExperimentConfig cfg;
  cfg.task = "narma2";
  cfg.length = 100;
  cfg.trials = 2;
  cfg.reservoir.n_blocks = 2;
  cfg.reservoir.seed = 7;
  cfg.reservoir.threads = 1;
  return cfg;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("config json round trip is a fixed point") {
  const std::string text = R"({
    "task": "narma5",
    "length": 250,
    "split": {"washout": 20, "train_end": 150, "test_end": 240},
    "reservoir": {
      "blocks": 3,
      "input_scale": 2.5,
      "strength": 4.0,
      "shots": 512,
      "mode": "trajectory",
      "seed": 42,
      "threads": 2
    },
    "trials": 4,
    "ridge": 1e-8,
    "sweep": {"strengths": [0.0, 5.0, 10.0]},
    "tipc": {"max_degree": 2, "max_delay": 6, "state_mix": false,
             "significance": 0.01, "input": "symmetric", "length": 700},
    "out": "run_a"
  })";
  const ExperimentConfig cfg = config_from_json_text(text);
  CHECK(cfg.task == "narma5");
  CHECK(cfg.length == 250);
  CHECK(cfg.split_explicit);
  CHECK(cfg.split.washout == 20);
  CHECK(cfg.split.train_end == 150);
  CHECK(cfg.split.test_end == 240);
  CHECK(cfg.reservoir.n_blocks == 3);
  CHECK(cfg.reservoir.input_scale == doctest::Approx(2.5));
  CHECK(cfg.reservoir.mode == Mode::trajectory);
  CHECK(cfg.reservoir.shots == 512);
  CHECK(cfg.reservoir.seed == 42);
  CHECK(cfg.trials == 4);
  CHECK(cfg.ridge == doctest::Approx(1e-8));
  CHECK(cfg.sweep_strengths == std::vector<double>{0.0, 5.0, 10.0});
  CHECK(cfg.tipc.max_degree == 2);
  CHECK(cfg.tipc.max_delay == 6);
  CHECK_FALSE(cfg.tipc.state_mix);
  CHECK(cfg.tipc.significance == doctest::Approx(0.01));
  CHECK(cfg.tipc_input == "symmetric");
  CHECK(cfg.tipc_length == 700);
  CHECK(cfg.out_dir == "run_a");

  const std::string echo1 = config_to_json(cfg);
  const std::string echo2 = config_to_json(config_from_json_text(echo1));
  CHECK(echo1 == echo2);
}

TEST_CASE("config parsing rejects malformed documents") {
  CHECK_THROWS_AS((void)config_from_json_text(R"({"task": "narma2", "bogus": 1})"),
                  std::runtime_error);
  CHECK_THROWS_AS(
      (void)config_from_json_text(R"({"reservoir": {"blocks": 2, "qubits": 12}})"),
      std::runtime_error);
  CHECK_THROWS_AS((void)config_from_json_text(R"({"task": "narma3"})"), std::runtime_error);
  CHECK_THROWS_AS((void)config_from_json_text(R"({"trials": 0})"), std::runtime_error);
  CHECK_THROWS_AS((void)config_from_json_text(R"({"ridge": -1.0})"), std::runtime_error);
  CHECK_THROWS_AS((void)config_from_json_text(R"({"sweep": {"strengths": [11.0]}})"),
                  std::runtime_error);
  CHECK_THROWS_AS((void)config_from_json_text(R"({"tipc": {"input": "gaussian"}})"),
                  std::runtime_error);
  CHECK_THROWS_AS(
      (void)config_from_json_text(
          R"({"split": {"washout": 90, "train_end": 80, "test_end": 100}})"),
      std::runtime_error);
  CHECK_THROWS_AS((void)config_from_json_text("not json"), std::runtime_error);
}

TEST_CASE("zero strength readout collapses to the train-mean predictor") {
  ExperimentConfig cfg = tiny_config();
  cfg.trials = 3;
  cfg.reservoir.coupling = GateParams::from_strength(0.0);
  const RegressionResult res = run_narma_experiment(cfg);
  CHECK(res.mean_predictor_nmse > 0.0);
  CHECK(std::abs(res.nmse_mean - res.mean_predictor_nmse) <=
        1e-9 * res.mean_predictor_nmse);
  CHECK(res.nmse_std <= 1e-12 * (1.0 + res.nmse_mean));
  CHECK(std::abs(res.dtw_mean - res.constant_dtw) <= 1e-9 * (1.0 + res.constant_dtw));
}

TEST_CASE("csv task with an explicit split reproduces the generated task exactly") {
  ExperimentConfig narma_cfg = tiny_config();
  const RegressionResult narma_res = run_narma_experiment(narma_cfg);

  const std::vector<double> u = gen_input(narma_cfg.length);
  NarmaSpec spec;
  spec.variant = 2;
  const std::vector<double> target = gen_narma_target(u, spec);

  const fs::path dir = fresh_dir("csv_match");
  const fs::path csv = dir / "series.csv";
  {
    std::ofstream out(csv);
    out << "t,u,y\n";
    char buf[64];
    for (std::size_t t = 0; t < u.size(); ++t) {
      out << t << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", u[t]);
      out << buf << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", target[t]);
      out << buf << '\n';
    }
  }

  ExperimentConfig csv_cfg = narma_cfg;
  csv_cfg.task = "csv";
  csv_cfg.csv_path = csv.string();
  csv_cfg.split = narma_cfg.split;
  csv_cfg.split_explicit = true;
  const RegressionResult csv_res = run_csv_experiment(csv_cfg);

  REQUIRE(csv_res.trials.size() == narma_res.trials.size());
  for (std::size_t i = 0; i < csv_res.trials.size(); ++i) {
    CHECK(csv_res.trials[i].nmse_test == narma_res.trials[i].nmse_test);
    CHECK(csv_res.trials[i].dtw_test == narma_res.trials[i].dtw_test);
  }
  CHECK(csv_res.nmse_mean == narma_res.nmse_mean);
  CHECK(csv_res.dtw_mean == narma_res.dtw_mean);
  CHECK(csv_res.mean_predictor_nmse == narma_res.mean_predictor_nmse);
  fs::remove_all(dir);
}

TEST_CASE("artifacts are complete and byte-stable across reruns and thread counts") {
  const fs::path dir = fresh_dir("artifacts");
  ExperimentConfig cfg = tiny_config();
  cfg.reservoir.mode = Mode::trajectory;
  cfg.reservoir.shots = 128;
  cfg.out_dir = dir.string();

  const std::vector<std::string> paths1 = write_regression_artifacts(cfg, run_narma_experiment(cfg));
  REQUIRE(paths1.size() == 4);
  std::map<std::string, std::string> first;
  for (const std::string& p : paths1) first[p] = slurp(p);
  CHECK(first.count((dir / "features.csv").string()) == 1);
  CHECK(first.count((dir / "predictions.csv").string()) == 1);
  CHECK(first.count((dir / "metrics.json").string()) == 1);
  CHECK(first.count((dir / "config_echo.json").string()) == 1);

  const nlohmann::json metrics =
      nlohmann::json::parse(first[(dir / "metrics.json").string()]);
  CHECK(metrics.at("trials") == cfg.trials);
  CHECK(metrics.at("per_trial").size() == static_cast<std::size_t>(cfg.trials));
  CHECK(metrics.at("aggregate").contains("nmse_mean"));
  CHECK(metrics.at("baselines").contains("mean_predictor_nmse"));

  cfg.reservoir.threads = 3;
  const std::vector<std::string> paths2 = write_regression_artifacts(cfg, run_narma_experiment(cfg));
  REQUIRE(paths2 == paths1);
  for (const std::string& p : paths2) CHECK(slurp(p) == first.at(p));
  fs::remove_all(dir);
}

TEST_CASE("error artifact records the failing command and message") {
  const fs::path dir = fresh_dir("error");
  const std::string path = write_error_artifact(dir.string(), "sweep", "boom: bad input");
  const nlohmann::json j = nlohmann::json::parse(slurp(path));
  CHECK(j.at("command") == "sweep");
  CHECK(j.at("error") == "boom: bad input");
  fs::remove_all(dir);
}

TEST_CASE("spearman matches hand-computed rank correlations") {
  CHECK(spearman({1, 2, 3, 4}, {10, 20, 30, 40}) == doctest::Approx(1.0));
  CHECK(spearman({1, 2, 3, 4}, {9, 7, 5, 3}) == doctest::Approx(-1.0));
  CHECK(spearman({1, 2, 3}, {3, 1, 2}) == doctest::Approx(-0.5));
  CHECK(spearman({1, 1, 2, 2}, {1, 2, 3, 4}) == doctest::Approx(4.0 / std::sqrt(20.0)));
  CHECK(spearman({5, 5, 5}, {1, 2, 3}) == doctest::Approx(0.0));
  CHECK_THROWS_AS((void)spearman({1, 2}, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS((void)spearman({1}, {1}), std::invalid_argument);
}

TEST_CASE("small sweep covers every strength and tracks its own argmin") {
  ExperimentConfig cfg = tiny_config();
  cfg.sweep_strengths = {0.0, 10.0};
  cfg.tipc.max_degree = 1;
  cfg.tipc.max_delay = 2;
  cfg.tipc.state_mix = false;
  cfg.tipc_length = 200;
  const SweepResult res = run_sweep_experiment(cfg);
  REQUIRE(res.points.size() == 2);
  CHECK(res.points[0].strength == 0.0);
  CHECK(res.points[1].strength == 10.0);
  double best_nmse = res.points[0].nmse;
  double best_s = res.points[0].strength;
  for (const SweepPoint& p : res.points) {
    CHECK(p.nmse >= 0.0);
    CHECK(p.dtw >= 0.0);
    CHECK(p.c_tot >= 0.0);
    CHECK(p.richness >= 0);
    if (p.nmse < best_nmse) {
      best_nmse = p.nmse;
      best_s = p.strength;
    }
  }
  CHECK(res.best_strength == best_s);
  CHECK(res.spearman_strength_vs_nmse >= -1.0);
  CHECK(res.spearman_strength_vs_nmse <= 1.0);

  const fs::path dir = fresh_dir("sweep");
  cfg.out_dir = dir.string();
  const std::vector<std::string> paths = write_sweep_artifacts(cfg, res);
  REQUIRE(paths.size() == 3);
  const std::string csv = slurp(dir / "sweep.csv");
  CHECK(csv.rfind("strength,nmse,dtw,c_tot,richness\n", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("tipc run honors the requested input kind") {
  ExperimentConfig cfg = tiny_config();
  cfg.tipc.max_degree = 1;
  cfg.tipc.max_delay = 2;
  cfg.tipc.state_mix = false;
  cfg.tipc_length = 300;
  cfg.tipc_input = "symmetric";
  const TipcRunResult res = run_tipc_experiment(cfg);
  CHECK(res.input_kind == "symmetric");
  CHECK(res.length == 300);
  CHECK(res.report.c_tot >= 0.0);
  CHECK(res.report.rank >= 1);

  const fs::path dir = fresh_dir("tipc");
  cfg.out_dir = dir.string();
  const std::vector<std::string> paths = write_tipc_artifacts(cfg, res);
  REQUIRE(paths.size() == 2);
  const nlohmann::json j = nlohmann::json::parse(slurp(dir / "capacity.json"));
  CHECK(j.at("input") == "symmetric");
  CHECK(j.at("report").contains("c_tot"));
  fs::remove_all(dir);
}

}  // TEST_SUITE
