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

#ifndef QRC_GATES_HPP
#define QRC_GATES_HPP

#include "qrc/linalg.hpp"

namespace qrc {

// Parameters of the tunable two-qubit measurement gate. The defaults give a
// CNOT (projective readout); all-zero parameters give the identity (no
// readout). Strength s in [0, 10] maps to theta = lambda = s*pi/10.
struct GateParams {
  double theta = 3.14159265358979323846;
  double phi = 0.0;
  double lambda = 3.14159265358979323846;
  double gamma = 0.0;

  static GateParams from_strength(double strength);
};

// exp(-i angle X / 2)
Mat rx(double angle);

// exp(-i angle Z / 2)
Mat rz(double angle);

// Two-qubit CNOT, control = qubit 0 (most significant), target = qubit 1.
Mat cnot();

// Tunable controlled rotation on a (target, control) pair: basis |b1 b0> with
// b0 the control and b1 the target. Identity at all-zero parameters, CNOT at
// theta = lambda = pi, phi = gamma = 0.
Mat controlled_u(const GateParams& p);

// Embeds a two-qubit gate into an n-qubit operator, mapping gate bit 1 (the
// more significant gate index bit) onto q_hi and gate bit 0 onto q_lo.
Mat embed_pair(const Mat& gate, int q_hi, int q_lo, int n_qubits);

// Pauli Z on one qubit of an n-qubit register, as a diagonal operator.
Mat pauli_z(int qubit, int n_qubits);

}  // namespace qrc

#endif  // QRC_GATES_HPP
