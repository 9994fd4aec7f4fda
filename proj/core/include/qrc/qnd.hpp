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

#ifndef QRC_QND_HPP
#define QRC_QND_HPP

#include <vector>

#include "qrc/gates.hpp"
#include "qrc/linalg.hpp"

namespace qrc {

// Heisenberg-picture check that repeated ancilla readouts form a commuting
// family. Measure-and-reset is dilated to a unitary circuit in which step k
// couples the two system qubits to a fresh ancilla pair; the step-k record is
// Z_a(k) = T_k^dag (Z on that pair) T_k with T_k the circuit prefix that
// wrote it. Returns the largest commutator element max |[Z_a(j), Z_b(k)]|
// over all pairs. Zero (to rounding) means the measured record has a joint
// classical distribution, i.e. it is a classical stochastic process.
// Register size is 2 + 2*inputs.size() qubits; at most 4 steps are accepted.
double qnd_max_commutator(const std::vector<double>& inputs, double input_scale,
                          const GateParams& coupling);

}  // namespace qrc

#endif  // QRC_QND_HPP
