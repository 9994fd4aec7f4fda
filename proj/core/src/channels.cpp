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

#include "qrc/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace qrc {

std::array<Mat, 2> amplitude_damping_kraus(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("damping probability must be in [0, 1]");
  Mat k0 = Mat::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - p);
  Mat k1 = Mat::Zero(2, 2);
  k1(0, 1) = std::sqrt(p);
  return {k0, k1};
}

namespace {

Mat embed_single(const Mat& gate, int qubit, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  Mat out = Mat::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const int b = bit_of(col, qubit, n_qubits);
    for (int w = 0; w < 2; ++w) {
      const cplx amp = gate(w, b);
      if (amp == cplx(0, 0)) continue;
      out(with_bit(col, qubit, n_qubits, w), col) = amp;
    }
  }
  return out;
}

}  // namespace

Mat apply_single_qubit_channel(const Mat& rho, const std::array<Mat, 2>& kraus,
                               int qubit, int n_qubits) {
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (const Mat& k : kraus) {
    const Mat kb = embed_single(k, qubit, n_qubits);
    out += kb * rho * kb.adjoint();
  }
  return out;
}

}  // namespace qrc
