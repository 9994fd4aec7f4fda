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

#include "qrc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qrc/parallel.hpp"
#include "qrc/readout.hpp"
#include "qrc/tasks.hpp"

namespace qrc {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kTrialTag = 0x7472;  // trial streams
constexpr std::uint64_t kTipcTag = 0x7470;   // tipc input streams

void require_keys(const json& j, const std::vector<std::string>& known,
                  const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw std::runtime_error("unknown config key '" + it.key() + "' in " + where);
  }
}

GateParams coupling_from_json(const json& j) {
  require_keys(j, {"theta", "phi", "lambda", "gamma"}, "reservoir.coupling");
  GateParams p;
  p.theta = j.value("theta", p.theta);
  p.phi = j.value("phi", p.phi);
  p.lambda = j.value("lambda", p.lambda);
  p.gamma = j.value("gamma", p.gamma);
  return p;
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.task != "narma2" && cfg.task != "narma5" && cfg.task != "narma10" && cfg.task != "csv")
    throw std::runtime_error("unknown task: " + cfg.task);
  if (!(cfg.split.washout < cfg.split.train_end && cfg.split.train_end < cfg.split.test_end))
    throw std::runtime_error("invalid split: need washout < train_end < test_end");
  if (cfg.trials < 1) throw std::runtime_error("trials must be >= 1");
  if (cfg.ridge < 0.0) throw std::runtime_error("ridge must be >= 0");
  for (double s : cfg.sweep_strengths)
    if (s < 0.0 || s > 10.0) throw std::runtime_error("sweep strengths must lie in [0, 10]");
  if (cfg.tipc_input != "asymmetric" && cfg.tipc_input != "symmetric" && cfg.tipc_input != "task")
    throw std::runtime_error("tipc input must be asymmetric, symmetric, or task");
}

void validate_split(const SplitSpec& s, std::size_t length) {
  if (!(s.washout < s.train_end && s.train_end < s.test_end && s.test_end <= length))
    throw std::runtime_error("invalid split: need washout < train_end < test_end <= length");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ExperimentConfig config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config is not valid json: ") + e.what());
  }
  require_keys(j,
               {"task", "csv", "length", "split", "reservoir", "trials", "ridge", "sweep",
                "tipc", "out"},
               "top level");

  ExperimentConfig cfg;
  cfg.task = j.value("task", cfg.task);
  cfg.length = j.value("length", cfg.length);
  cfg.trials = j.value("trials", cfg.trials);
  cfg.ridge = j.value("ridge", cfg.ridge);
  cfg.out_dir = j.value("out", cfg.out_dir);

  if (j.contains("csv")) {
    const json& c = j["csv"];
    require_keys(c, {"path", "normalize_u"}, "csv");
    cfg.csv_path = c.value("path", cfg.csv_path);
    cfg.normalize_u = c.value("normalize_u", cfg.normalize_u);
  }
  if (j.contains("split")) {
    const json& s = j["split"];
    require_keys(s, {"washout", "train_end", "test_end"}, "split");
    cfg.split.washout = s.value("washout", cfg.split.washout);
    cfg.split.train_end = s.value("train_end", cfg.split.train_end);
    cfg.split.test_end = s.value("test_end", cfg.split.test_end);
    cfg.split_explicit = true;
  }
  if (j.contains("reservoir")) {
    const json& r = j["reservoir"];
    require_keys(r,
                 {"blocks", "input_scale", "strength", "coupling", "shots", "mode", "seed",
                  "baseline_damping", "threads"},
                 "reservoir");
    cfg.reservoir.n_blocks = r.value("blocks", cfg.reservoir.n_blocks);
    cfg.reservoir.input_scale = r.value("input_scale", cfg.reservoir.input_scale);
    if (r.contains("strength"))
      cfg.reservoir.coupling = GateParams::from_strength(r["strength"].get<double>());
    if (r.contains("coupling")) cfg.reservoir.coupling = coupling_from_json(r["coupling"]);
    cfg.reservoir.shots = r.value("shots", cfg.reservoir.shots);
    if (r.contains("mode")) cfg.reservoir.mode = mode_from_string(r["mode"].get<std::string>());
    cfg.reservoir.seed = r.value("seed", cfg.reservoir.seed);
    cfg.reservoir.baseline_damping = r.value("baseline_damping", cfg.reservoir.baseline_damping);
    cfg.reservoir.threads = r.value("threads", cfg.reservoir.threads);
  }
  if (j.contains("sweep")) {
    const json& s = j["sweep"];
    require_keys(s, {"strengths"}, "sweep");
    if (s.contains("strengths")) cfg.sweep_strengths = s["strengths"].get<std::vector<double>>();
  }
  if (j.contains("tipc")) {
    const json& t = j["tipc"];
    require_keys(t, {"max_degree", "max_delay", "state_mix", "significance", "input", "length"},
                 "tipc");
    cfg.tipc.max_degree = t.value("max_degree", cfg.tipc.max_degree);
    cfg.tipc.max_delay = t.value("max_delay", cfg.tipc.max_delay);
    cfg.tipc.state_mix = t.value("state_mix", cfg.tipc.state_mix);
    cfg.tipc.significance = t.value("significance", cfg.tipc.significance);
    cfg.tipc_input = t.value("input", cfg.tipc_input);
    cfg.tipc_length = t.value("length", cfg.tipc_length);
  }

  validate_config(cfg);
  return cfg;
}

ExperimentConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return config_from_json_text(text);
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["task"] = cfg.task;
  j["csv"] = {{"path", cfg.csv_path}, {"normalize_u", cfg.normalize_u}};
  j["length"] = cfg.length;
  j["split"] = {{"washout", cfg.split.washout},
                {"train_end", cfg.split.train_end},
                {"test_end", cfg.split.test_end}};
  j["reservoir"] = {{"blocks", cfg.reservoir.n_blocks},
                    {"input_scale", cfg.reservoir.input_scale},
                    {"coupling",
                     {{"theta", cfg.reservoir.coupling.theta},
                      {"phi", cfg.reservoir.coupling.phi},
                      {"lambda", cfg.reservoir.coupling.lambda},
                      {"gamma", cfg.reservoir.coupling.gamma}}},
                    {"shots", cfg.reservoir.shots},
                    {"mode", to_string(cfg.reservoir.mode)},
                    {"seed", cfg.reservoir.seed},
                    {"baseline_damping", cfg.reservoir.baseline_damping}};
  // threads is an execution knob that never changes results, so it is left
  // out of the echo: two runs write identical echoes iff they describe the
  // same experiment.
  j["trials"] = cfg.trials;
  j["ridge"] = cfg.ridge;
  std::vector<double> strengths = cfg.sweep_strengths;
  if (strengths.empty()) {
    strengths.resize(11);
    std::iota(strengths.begin(), strengths.end(), 0.0);
  }
  j["sweep"] = {{"strengths", strengths}};
  j["tipc"] = {{"max_degree", cfg.tipc.max_degree},
               {"max_delay", cfg.tipc.max_delay},
               {"state_mix", cfg.tipc.state_mix},
               {"significance", cfg.tipc.significance},
               {"input", cfg.tipc_input},
               {"length", cfg.tipc_length}};
  j["out"] = cfg.out_dir;
  return j.dump(2);
}

RegressionResult run_task_regression(const ExperimentConfig& cfg, const std::vector<double>& u,
                                     const std::vector<double>& target, const SplitSpec& split) {
  validate_split(split, u.size());
  if (target.size() != u.size()) throw std::runtime_error("input/target length mismatch");

  RegressionResult result;
  result.split = split;
  result.n_train = split.train_end - split.washout;
  result.n_test = split.test_end - split.train_end;
  result.target = Eigen::Map<const RVec>(target.data(), static_cast<Eigen::Index>(target.size()));

  const RVec y_train = result.target.segment(static_cast<Eigen::Index>(split.washout),
                                             static_cast<Eigen::Index>(result.n_train));
  const RVec y_test = result.target.segment(static_cast<Eigen::Index>(split.train_end),
                                            static_cast<Eigen::Index>(result.n_test));

  const double y_bar = y_train.mean();
  const RVec constant = RVec::Constant(static_cast<Eigen::Index>(result.n_test), y_bar);
  result.mean_predictor_nmse = nmse_paper(y_test, constant);
  result.constant_dtw = dtw_distance(y_test, constant);

  result.trials.resize(static_cast<std::size_t>(cfg.trials));
  result.predictions.resize(static_cast<std::size_t>(cfg.trials));

  const auto run_trial = [&](std::size_t trial) {
    ReservoirConfig rc = cfg.reservoir;
    rc.seed = mix_seed(cfg.reservoir.seed, kTrialTag, trial);
    const RMat features = run_reservoir(u, rc);

    RMat design(features.rows(), features.cols() + 1);
    design << features, RVec::Ones(features.rows());

    const RMat x_train = design.middleRows(static_cast<Eigen::Index>(split.washout),
                                           static_cast<Eigen::Index>(result.n_train));
    const FitResult fit = fit_readout(x_train, y_train, cfg.ridge);

    const RVec prediction = predict(design, fit.weights);
    const RVec p_test = prediction.segment(static_cast<Eigen::Index>(split.train_end),
                                           static_cast<Eigen::Index>(result.n_test));

    TrialMetrics m;
    m.nmse_train = fit.train_mse;
    m.nmse_test = nmse_paper(y_test, p_test);
    m.dtw_test = dtw_distance(y_test, p_test);
    result.trials[trial] = m;
    result.predictions[trial] = prediction;
    if (trial == 0) result.features = features;
  };

  // Trajectory runs parallelize over shots internally; the other modes spread
  // trials across the worker pool instead. Either way each trial's seed is a
  // pure function of (base seed, trial index), so the schedule cannot change
  // the results.
  if (cfg.reservoir.mode == Mode::trajectory) {
    for (int trial = 0; trial < cfg.trials; ++trial) run_trial(static_cast<std::size_t>(trial));
  } else {
    parallel_for_chunks(static_cast<std::size_t>(cfg.trials), cfg.reservoir.threads,
                        [&](std::size_t begin, std::size_t end, unsigned) {
                          for (std::size_t t = begin; t < end; ++t) run_trial(t);
                        });
  }

  const auto mean_std = [&](auto pick) {
    double mean = 0.0;
    for (const TrialMetrics& m : result.trials) mean += pick(m);
    mean /= static_cast<double>(result.trials.size());
    double var = 0.0;
    for (const TrialMetrics& m : result.trials) var += (pick(m) - mean) * (pick(m) - mean);
    var = result.trials.size() > 1 ? var / static_cast<double>(result.trials.size() - 1) : 0.0;
    return std::make_pair(mean, std::sqrt(var));
  };
  std::tie(result.nmse_mean, result.nmse_std) =
      mean_std([](const TrialMetrics& m) { return m.nmse_test; });
  std::tie(result.dtw_mean, result.dtw_std) =
      mean_std([](const TrialMetrics& m) { return m.dtw_test; });
  return result;
}

namespace {

NarmaSpec narma_spec_for_task(const std::string& task) {
  NarmaSpec spec;
  if (task == "narma2") spec.variant = 2;
  else if (task == "narma5") spec.variant = 5;
  else if (task == "narma10") spec.variant = 10;
  else throw std::runtime_error("not a NARMA task: " + task);
  return spec;
}

}  // namespace

RegressionResult run_narma_experiment(const ExperimentConfig& cfg) {
  const NarmaSpec spec = narma_spec_for_task(cfg.task);
  const std::vector<double> u = gen_input(cfg.length);
  const std::vector<double> target = gen_narma_target(u, spec);
  return run_task_regression(cfg, u, target, cfg.split);
}

RegressionResult run_csv_experiment(const ExperimentConfig& cfg) {
  if (cfg.task != "csv") throw std::runtime_error("not a csv task: " + cfg.task);
  if (cfg.csv_path.empty()) throw std::runtime_error("csv task needs csv.path");
  const SeriesBundle bundle = load_csv(cfg.csv_path, cfg.normalize_u);
  SplitSpec split = cfg.split;
  if (!cfg.split_explicit) {
    split.washout = 100;
    split.train_end = 800;
    split.test_end = std::min<std::size_t>(1000, bundle.u.size());
  }
  return run_task_regression(cfg, bundle.u, bundle.y, split);
}

SweepResult run_sweep_experiment(const ExperimentConfig& cfg) {
  if (cfg.reservoir.mode == Mode::baseline)
    throw std::runtime_error("strength sweep needs a measured reservoir mode");

  std::vector<double> strengths = cfg.sweep_strengths;
  if (strengths.empty()) {
    strengths.resize(11);
    std::iota(strengths.begin(), strengths.end(), 0.0);
  }

  // Fixed-seed i.i.d. asymmetric input for the per-strength TIPC column.
  std::vector<double> u_tipc(cfg.tipc_length);
  Rng rng(mix_seed(cfg.reservoir.seed, kTipcTag, 0));
  for (double& v : u_tipc) v = rng.uniform();

  SweepResult result;
  std::vector<double> errors;
  for (double s : strengths) {
    ExperimentConfig point_cfg = cfg;
    if (point_cfg.task == "csv") point_cfg.task = "narma2";
    point_cfg.reservoir.coupling = GateParams::from_strength(s);

    const RegressionResult reg = run_narma_experiment(point_cfg);

    ReservoirConfig rc = point_cfg.reservoir;
    rc.mode = Mode::ensemble;
    const RMat states = run_reservoir(u_tipc, rc);
    const auto [P, rank] = normalize_states(states);
    const std::vector<BasisTerm> terms = enumerate_basis(cfg.tipc, cfg.tipc.state_mix ? rank : 0);
    CapacityReport report = compute_capacities(P, u_tipc, terms, cfg.tipc.max_delay);
    threshold_and_truncate(report, cfg.tipc.significance);

    SweepPoint point;
    point.strength = s;
    point.nmse = reg.nmse_mean;
    point.dtw = reg.dtw_mean;
    point.c_tot = report.c_tot;
    point.richness = report.richness;
    result.points.push_back(point);
    errors.push_back(point.nmse);
  }

  result.spearman_strength_vs_nmse = spearman(strengths, errors);
  std::size_t best = 0, cmax = 0;
  for (std::size_t i = 1; i < result.points.size(); ++i) {
    if (result.points[i].nmse < result.points[best].nmse) best = i;
    if (result.points[i].c_tot > result.points[cmax].c_tot) cmax = i;
  }
  result.best_strength = result.points[best].strength;
  result.tipc_argmax_strength = result.points[cmax].strength;
  return result;
}

TipcRunResult run_tipc_experiment(const ExperimentConfig& cfg) {
  std::vector<double> u(cfg.tipc_length);
  if (cfg.tipc_input == "task") {
    u = gen_input(cfg.tipc_length);
  } else {
    Rng rng(mix_seed(cfg.reservoir.seed, kTipcTag, 0));
    const double lo = cfg.tipc_input == "symmetric" ? -1.0 : 0.0;
    for (double& v : u) v = rng.uniform(lo, 1.0);
  }

  const RMat states = run_reservoir(u, cfg.reservoir);
  const auto [P, rank] = normalize_states(states);
  const std::vector<BasisTerm> terms = enumerate_basis(cfg.tipc, cfg.tipc.state_mix ? rank : 0);
  CapacityReport report = compute_capacities(P, u, terms, cfg.tipc.max_delay);
  threshold_and_truncate(report, cfg.tipc.significance);

  TipcRunResult result;
  result.report = std::move(report);
  result.input_kind = cfg.tipc_input;
  result.length = cfg.tipc_length;
  return result;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

namespace {

std::string features_csv(const RMat& features) {
  std::string out = "t";
  for (Eigen::Index f = 0; f < features.cols(); ++f) out += ",f" + std::to_string(f);
  out += "\n";
  for (Eigen::Index t = 0; t < features.rows(); ++t) {
    out += std::to_string(t);
    for (Eigen::Index f = 0; f < features.cols(); ++f) out += "," + format_double(features(t, f));
    out += "\n";
  }
  return out;
}

std::string predictions_csv(const RegressionResult& r) {
  std::string out = "t,target,prediction,lo2,hi2\n";
  const std::size_t n_trials = r.predictions.size();
  for (std::size_t t = r.split.train_end; t < r.split.test_end; ++t) {
    const Eigen::Index ti = static_cast<Eigen::Index>(t);
    double mean = 0.0;
    for (const RVec& p : r.predictions) mean += p(ti);
    mean /= static_cast<double>(n_trials);
    double var = 0.0;
    for (const RVec& p : r.predictions) var += (p(ti) - mean) * (p(ti) - mean);
    var = n_trials > 1 ? var / static_cast<double>(n_trials - 1) : 0.0;
    const double sd = std::sqrt(var);
    out += std::to_string(t) + "," + format_double(r.target(ti)) + "," + format_double(mean) +
           "," + format_double(mean - 2 * sd) + "," + format_double(mean + 2 * sd) + "\n";
  }
  return out;
}

json metrics_json(const ExperimentConfig& cfg, const RegressionResult& r) {
  json per_trial = json::array();
  for (const TrialMetrics& m : r.trials)
    per_trial.push_back(
        {{"nmse_train", m.nmse_train}, {"nmse_test", m.nmse_test}, {"dtw_test", m.dtw_test}});
  json j;
  j["task"] = cfg.task;
  j["mode"] = to_string(cfg.reservoir.mode);
  j["trials"] = cfg.trials;
  j["n_train"] = r.n_train;
  j["n_test"] = r.n_test;
  j["split"] = {{"washout", r.split.washout},
                {"train_end", r.split.train_end},
                {"test_end", r.split.test_end}};
  j["per_trial"] = std::move(per_trial);
  j["aggregate"] = {{"nmse_mean", r.nmse_mean},
                    {"nmse_std", r.nmse_std},
                    {"dtw_mean", r.dtw_mean},
                    {"dtw_std", r.dtw_std}};
  j["baselines"] = {{"mean_predictor_nmse", r.mean_predictor_nmse},
                    {"constant_dtw", r.constant_dtw}};
  j["ratios"] = {
      {"nmse_vs_mean_predictor",
       r.nmse_mean > 0.0 ? r.mean_predictor_nmse / r.nmse_mean : 0.0},
      {"dtw_vs_constant", r.dtw_mean > 0.0 ? r.constant_dtw / r.dtw_mean : 0.0}};
  return j;
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

}  // namespace

std::vector<std::string> write_regression_artifacts(const ExperimentConfig& cfg,
                                                    const RegressionResult& result) {
  std::vector<std::string> written;
  written.push_back(join_path(cfg.out_dir, "features.csv"));
  atomic_write(written.back(), features_csv(result.features));
  written.push_back(join_path(cfg.out_dir, "predictions.csv"));
  atomic_write(written.back(), predictions_csv(result));
  written.push_back(join_path(cfg.out_dir, "metrics.json"));
  atomic_write(written.back(), metrics_json(cfg, result).dump(2) + "\n");
  written.push_back(join_path(cfg.out_dir, "config_echo.json"));
  atomic_write(written.back(), config_to_json(cfg) + "\n");
  return written;
}

std::vector<std::string> write_sweep_artifacts(const ExperimentConfig& cfg,
                                               const SweepResult& result) {
  std::string csv = "strength,nmse,dtw,c_tot,richness\n";
  for (const SweepPoint& p : result.points) {
    csv += format_double(p.strength) + "," + format_double(p.nmse) + "," + format_double(p.dtw) +
           "," + format_double(p.c_tot) + "," + std::to_string(p.richness) + "\n";
  }

  json j;
  j["mode"] = to_string(cfg.reservoir.mode);
  j["points"] = json::array();
  for (const SweepPoint& p : result.points)
    j["points"].push_back({{"strength", p.strength},
                           {"nmse", p.nmse},
                           {"dtw", p.dtw},
                           {"c_tot", p.c_tot},
                           {"richness", p.richness}});
  j["spearman_strength_vs_nmse"] = result.spearman_strength_vs_nmse;
  j["best_strength"] = result.best_strength;
  j["tipc_argmax_strength"] = result.tipc_argmax_strength;

  std::vector<std::string> written;
  written.push_back(join_path(cfg.out_dir, "sweep.csv"));
  atomic_write(written.back(), csv);
  written.push_back(join_path(cfg.out_dir, "metrics.json"));
  atomic_write(written.back(), j.dump(2) + "\n");
  written.push_back(join_path(cfg.out_dir, "config_echo.json"));
  atomic_write(written.back(), config_to_json(cfg) + "\n");
  return written;
}

std::vector<std::string> write_tipc_artifacts(const ExperimentConfig& cfg,
                                              const TipcRunResult& result) {
  json j = json::parse(report_to_json(result.report));
  json wrapped;
  wrapped["input"] = result.input_kind;
  wrapped["length"] = result.length;
  wrapped["mode"] = to_string(cfg.reservoir.mode);
  wrapped["report"] = std::move(j);

  std::vector<std::string> written;
  written.push_back(join_path(cfg.out_dir, "capacity.json"));
  atomic_write(written.back(), wrapped.dump(2) + "\n");
  written.push_back(join_path(cfg.out_dir, "config_echo.json"));
  atomic_write(written.back(), config_to_json(cfg) + "\n");
  return written;
}

std::string write_error_artifact(const std::string& out_dir, const std::string& command,
                                 const std::string& message) {
  json j;
  j["command"] = command;
  j["error"] = message;
  const std::string path = join_path(out_dir, "error.json");
  atomic_write(path, j.dump(2) + "\n");
  return path;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("spearman needs two equal-length series of at least 2");

  const auto ranks = [](const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<double> r(n);
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
      const double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
      for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
      i = j + 1;
    }
    return r;
  };

  const std::vector<double> ra = ranks(a);
  const std::vector<double> rb = ranks(b);
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += ra[i];
    mb += rb[i];
  }
  ma /= n;
  mb /= n;
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cov += (ra[i] - ma) * (rb[i] - mb);
    va += (ra[i] - ma) * (ra[i] - ma);
    vb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (va == 0.0 || vb == 0.0) return 0.0;
  return cov / std::sqrt(va * vb);
}

}  // namespace qrc
