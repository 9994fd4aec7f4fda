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

#ifndef QRC_RESERVOIR_HPP
#define QRC_RESERVOIR_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qrc/gates.hpp"
#include "qrc/linalg.hpp"
#include "qrc/rng.hpp"

namespace qrc {

// ensemble:   exact measurement-averaged density-matrix evolution
//             (infinite-shot limit, deterministic).
// trajectory: per-shot statevector evolution with sampled measurement
//             outcomes; features are shot averages.
// baseline:   system-only evolution without mid-circuit measurement,
//             with optional per-qubit amplitude damping; features are
//             system-qubit <Z>.
enum class Mode { ensemble, trajectory, baseline };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

struct ReservoirConfig {
  int n_blocks = 6;
  double input_scale = 3.14159265358979323846;  // rotation angle is input_scale * u_t
  GateParams coupling{};                        // system-ancilla readout gate, default CNOT
  int shots = 8192;                             // trajectory mode only
  Mode mode = Mode::ensemble;
  std::uint64_t seed = 0;
  double baseline_damping = 0.1;                // baseline mode only
  unsigned threads = 0;                         // 0 = hardware concurrency
};

// Input-driven unitary on one block's two system qubits (4x4, qubits 0-1).
Mat system_unitary(double u, double input_scale);

// Full one-step block unitary on [sys0, sys1, anc2, anc3] (16x16): the system
// unitary followed by one readout gate per (system, ancilla) pair.
Mat build_block_unitary(double u, double input_scale, const GateParams& coupling);

// One measurement-averaged step of a single block: tensors a fresh |00>
// ancilla onto rho (4x4 system state), applies the block unitary, returns the
// two exact ancilla <Z> values, and traces the ancilla back out.
std::pair<double, double> step_ensemble(Mat& rho, const Mat& block_unitary);

// One sampled step of a single-shot trajectory: psi is the 4-dim system
// statevector; the ancilla measurement outcome is sampled and the system
// collapses to the matching branch. Returns the two outcomes as +/-1.
std::pair<int, int> step_trajectory(Vec& psi, const Mat& block_unitary, Rng& rng);

// Runs the reservoir over the whole input sequence. Returns a T x
// (2*n_blocks) feature matrix; row t holds the ancilla <Z> readouts taken
// during step t, block-major ([b0.anc2, b0.anc3, b1.anc2, ...]). Dispatches
// on cfg.mode; baseline mode reports system <Z> instead.
RMat run_reservoir(const std::vector<double>& u, const ReservoirConfig& cfg);

// System-only evolution with per-qubit amplitude damping after each step.
RMat run_baseline(const std::vector<double>& u, const ReservoirConfig& cfg);

}  // namespace qrc

#endif  // QRC_RESERVOIR_HPP
