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
#include <vector>

#include <doctest.h>

#include "qrc/linalg.hpp"
#include "qrc/reservoir.hpp"
#include "qrc/tasks.hpp"

using namespace qrc;

TEST_SUITE("reservoir") {

// With full-strength (CNOT) readout the measurement-averaged block state is
// classical, and the exact closed form of the feature columns is
//   second ancilla:  prod_{tau<=t} cos(a u_tau)
//   first ancilla:   the square of that product.
// This oracle pins the circuit order, the readout wiring, and the partial
// trace all at once.
TEST_CASE("projective readout features follow the cosine product law") {
  const double a = 1.3;
  const std::vector<double> u = gen_input(40);
  ReservoirConfig cfg;
  cfg.input_scale = a;
  cfg.n_blocks = 2;
  const RMat f = run_reservoir(u, cfg);

  double prod = 1.0;
  for (std::size_t t = 0; t < u.size(); ++t) {
    prod *= std::cos(a * u[t]);
    for (int b = 0; b < cfg.n_blocks; ++b) {
      CHECK(std::abs(f(static_cast<Eigen::Index>(t), 2 * b + 1) - prod) <= 1e-12);
      CHECK(std::abs(f(static_cast<Eigen::Index>(t), 2 * b) - prod * prod) <= 1e-12);
    }
  }
}

TEST_CASE("measurement-averaged step preserves density-matrix structure") {
  Rng rng(21);
  Mat rho = Mat::Zero(4, 4);
  rho(0, 0) = 1.0;
  const GateParams coupling = GateParams::from_strength(6.0);
  for (int t = 0; t < 30; ++t) {
    const Mat block = build_block_unitary(rng.uniform(0.0, 0.2), 2.0, coupling);
    step_ensemble(rho, block);
    CHECK(std::abs(rho.trace() - cplx(1.0, 0.0)) <= 1e-12);
    CHECK(max_abs(rho - dag(rho)) <= 1e-12);
    Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-12);
  }
}

TEST_CASE("zero-strength readout leaves the ancillas untouched") {
  const std::vector<double> u = gen_input(25);
  ReservoirConfig cfg;
  cfg.coupling = GateParams::from_strength(0.0);
  const RMat f = run_reservoir(u, cfg);
  CHECK((f.array() - 1.0).abs().maxCoeff() <= 1e-12);
}

TEST_CASE("sampled trajectories are deterministic in the seed") {
  const std::vector<double> u = gen_input(20);
  ReservoirConfig cfg;
  cfg.mode = Mode::trajectory;
  cfg.shots = 64;
  cfg.n_blocks = 2;
  cfg.seed = 99;

  cfg.threads = 1;
  const RMat one = run_reservoir(u, cfg);
  cfg.threads = 4;
  const RMat four = run_reservoir(u, cfg);
  CHECK((one - four).cwiseAbs().maxCoeff() == 0.0);

  cfg.seed = 100;
  const RMat other = run_reservoir(u, cfg);
  CHECK((one - other).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("shot averages approach the measurement-averaged expectations") {
  const std::vector<double> u = gen_input(30);
  ReservoirConfig cfg;
  cfg.n_blocks = 1;
  cfg.input_scale = 2.0;
  cfg.coupling = GateParams::from_strength(7.0);
  const RMat exact = run_reservoir(u, cfg);

  cfg.mode = Mode::trajectory;
  cfg.shots = 4096;
  cfg.seed = 5;
  const RMat sampled = run_reservoir(u, cfg);

  // Feature std dev is at most 2*sqrt(0.25/shots) = 0.015625; allow 5 sigma.
  CHECK((exact - sampled).cwiseAbs().maxCoeff() <= 0.08);
}

TEST_CASE("undamped baseline matches a statevector oracle") {
  const double a = 2.2;
  const std::vector<double> u = gen_input(30);
  ReservoirConfig cfg;
  cfg.mode = Mode::baseline;
  cfg.baseline_damping = 0.0;
  cfg.input_scale = a;
  cfg.n_blocks = 1;
  const RMat f = run_reservoir(u, cfg);

  Vec psi = Vec::Zero(4);
  psi(0) = 1.0;
  for (std::size_t t = 0; t < u.size(); ++t) {
    psi = system_unitary(u[t], a) * psi;
    double z0 = 0.0, z1 = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      const double p = std::norm(psi(i));
      z0 += (bit_of(i, 0, 2) ? -1.0 : 1.0) * p;
      z1 += (bit_of(i, 1, 2) ? -1.0 : 1.0) * p;
    }
    CHECK(std::abs(f(static_cast<Eigen::Index>(t), 0) - z0) <= 1e-12);
    CHECK(std::abs(f(static_cast<Eigen::Index>(t), 1) - z1) <= 1e-12);
  }
}

TEST_CASE("features are bounded expectation values in every mode") {
  const std::vector<double> u = gen_input(25);
  for (Mode mode : {Mode::ensemble, Mode::trajectory, Mode::baseline}) {
    ReservoirConfig cfg;
    cfg.mode = mode;
    cfg.shots = 128;
    cfg.n_blocks = 2;
    cfg.coupling = GateParams::from_strength(4.0);
    cfg.baseline_damping = 0.25;
    const RMat f = run_reservoir(u, cfg);
    CHECK(f.rows() == static_cast<Eigen::Index>(u.size()));
    CHECK(f.cols() == 2 * cfg.n_blocks);
    CHECK(f.cwiseAbs().maxCoeff() <= 1.0 + 1e-12);
  }
}

TEST_CASE("mode names round-trip and bad configs are rejected") {
  for (Mode mode : {Mode::ensemble, Mode::trajectory, Mode::baseline})
    CHECK(mode_from_string(to_string(mode)) == mode);
  CHECK_THROWS(mode_from_string("exact"));

  const std::vector<double> u = gen_input(5);
  ReservoirConfig cfg;
  cfg.n_blocks = 0;
  CHECK_THROWS(run_reservoir(u, cfg));
  cfg = ReservoirConfig{};
  cfg.mode = Mode::trajectory;
  cfg.shots = 0;
  CHECK_THROWS(run_reservoir(u, cfg));
  cfg = ReservoirConfig{};
  cfg.baseline_damping = 1.5;
  cfg.mode = Mode::baseline;
  CHECK_THROWS(run_reservoir(u, cfg));
  CHECK_THROWS(run_reservoir(std::vector<double>{}, ReservoirConfig{}));
}

}  // TEST_SUITE
