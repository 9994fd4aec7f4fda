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

#include "qrc/qnd.hpp"

#include <algorithm>
#include <stdexcept>

#include "qrc/reservoir.hpp"

namespace qrc {

double qnd_max_commutator(const std::vector<double>& inputs, double input_scale,
                          const GateParams& coupling) {
  const int steps = static_cast<int>(inputs.size());
  if (steps < 1) throw std::invalid_argument("need at least one input");
  if (steps > 4) throw std::invalid_argument("dilated register capped at 4 steps (10 qubits)");

  const int n = 2 + 2 * steps;
  const std::size_t dim = std::size_t{1} << n;
  const Mat readout = controlled_u(coupling);
  const Mat anc_identity = Mat::Identity(dim / 4, dim / 4);

  std::vector<Mat> observables;
  Mat chain = Mat::Identity(dim, dim);
  for (int k = 0; k < steps; ++k) {
    const int a0 = 2 + 2 * k, a1 = 3 + 2 * k;
    const Mat step = embed_pair(readout, a1, 1, n) * embed_pair(readout, a0, 0, n) *
                     kron(system_unitary(inputs[k], input_scale), anc_identity);
    chain = (step * chain).eval();
    observables.push_back(chain.adjoint() * pauli_z(a0, n) * chain);
    observables.push_back(chain.adjoint() * pauli_z(a1, n) * chain);
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < observables.size(); ++i) {
    for (std::size_t j = i + 1; j < observables.size(); ++j) {
      const Mat comm = observables[i] * observables[j] - observables[j] * observables[i];
      worst = std::max(worst, max_abs(comm));
    }
  }
  return worst;
}

}  // namespace qrc
