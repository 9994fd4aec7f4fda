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

#include <vector>

#include <benchmark/benchmark.h>

#include "qrc/gates.hpp"
#include "qrc/readout.hpp"
#include "qrc/reservoir.hpp"
#include "qrc/rng.hpp"
#include "qrc/tasks.hpp"
#include "qrc/tipc.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

void BM_BlockUnitary(benchmark::State& state) {
  const qrc::GateParams coupling = qrc::GateParams::from_strength(7.0);
  double u = 0.0;
  for (auto _ : state) {
    u += 0.001;
    benchmark::DoNotOptimize(qrc::build_block_unitary(u, kPi, coupling));
  }
}
BENCHMARK(BM_BlockUnitary);

void BM_EnsembleStep(benchmark::State& state) {
  const qrc::Mat bu = qrc::build_block_unitary(0.13, kPi, qrc::GateParams::from_strength(7.0));
  qrc::Mat rho = qrc::Mat::Identity(4, 4) / 4.0;
  for (auto _ : state) benchmark::DoNotOptimize(qrc::step_ensemble(rho, bu));
}
BENCHMARK(BM_EnsembleStep);

void BM_TrajectoryStep(benchmark::State& state) {
  const qrc::Mat bu = qrc::build_block_unitary(0.13, kPi, qrc::GateParams::from_strength(7.0));
  qrc::Rng rng(11);
  qrc::Vec psi = qrc::Vec::Zero(4);
  psi[0] = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(qrc::step_trajectory(psi, bu, rng));
}
BENCHMARK(BM_TrajectoryStep);

void BM_EnsembleRun(benchmark::State& state) {
  const std::vector<double> u = qrc::gen_input(static_cast<std::size_t>(state.range(0)));
  qrc::ReservoirConfig cfg;
  cfg.n_blocks = 6;
  cfg.mode = qrc::Mode::ensemble;
  for (auto _ : state) benchmark::DoNotOptimize(qrc::run_reservoir(u, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0) * cfg.n_blocks);
}
BENCHMARK(BM_EnsembleRun)->Arg(100)->Arg(1100);

void BM_TrajectoryRun(benchmark::State& state) {
  const std::vector<double> u = qrc::gen_input(100);
  qrc::ReservoirConfig cfg;
  cfg.n_blocks = 6;
  cfg.mode = qrc::Mode::trajectory;
  cfg.shots = static_cast<int>(state.range(0));
  cfg.seed = 3;
  for (auto _ : state) benchmark::DoNotOptimize(qrc::run_reservoir(u, cfg));
  state.SetItemsProcessed(state.iterations() * 100 * cfg.n_blocks * cfg.shots);
}
BENCHMARK(BM_TrajectoryRun)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_FitReadout(benchmark::State& state) {
  qrc::Rng rng(5);
  qrc::RMat X(90, 13);
  qrc::RVec y(90);
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) X(i, j) = rng.uniform(-1.0, 1.0);
    y[i] = rng.uniform(-1.0, 1.0);
  }
  for (auto _ : state) benchmark::DoNotOptimize(qrc::fit_readout(X, y, 1e-8));
}
BENCHMARK(BM_FitReadout);

void BM_Dtw(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  qrc::Rng rng(9);
  qrc::RVec s(n), t(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    s[i] = rng.uniform();
    t[i] = rng.uniform();
  }
  for (auto _ : state) benchmark::DoNotOptimize(qrc::dtw_distance(s, t));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Dtw)->Range(32, 512)->Complexity(benchmark::oNSquared);

void BM_Capacities(benchmark::State& state) {
  const std::size_t T = 1100;
  qrc::Rng rng(17);
  std::vector<double> u(T);
  for (double& v : u) v = rng.uniform();
  qrc::ReservoirConfig rc;
  rc.n_blocks = 6;
  rc.mode = qrc::Mode::ensemble;
  rc.coupling = qrc::GateParams::from_strength(7.0);
  const qrc::RMat states = qrc::run_reservoir(u, rc);
  const auto [P, rank] = qrc::normalize_states(states);
  qrc::TipcConfig tc;
  tc.max_degree = static_cast<int>(state.range(0));
  tc.max_delay = 8;
  tc.state_mix = false;
  const std::vector<qrc::BasisTerm> terms = qrc::enumerate_basis(tc, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(qrc::compute_capacities(P, u, terms, tc.max_delay));
  state.SetLabel(std::to_string(terms.size()) + " terms");
}
BENCHMARK(BM_Capacities)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
