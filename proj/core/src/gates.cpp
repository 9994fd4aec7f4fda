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

#include "qrc/gates.hpp"

#include <cmath>

namespace qrc {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

GateParams GateParams::from_strength(double strength) {
  GateParams p;
  p.theta = strength * kPi / 10.0;
  p.phi = 0.0;
  p.lambda = strength * kPi / 10.0;
  p.gamma = 0.0;
  return p;
}

Mat rx(double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Mat g(2, 2);
  g << cplx(c, 0), cplx(0, -s), cplx(0, -s), cplx(c, 0);
  return g;
}

Mat rz(double angle) {
  Mat g = Mat::Zero(2, 2);
  g(0, 0) = std::exp(cplx(0, -angle / 2.0));
  g(1, 1) = std::exp(cplx(0, angle / 2.0));
  return g;
}

Mat cnot() {
  Mat g = Mat::Zero(4, 4);
  g(0, 0) = 1;
  g(1, 1) = 1;
  g(2, 3) = 1;
  g(3, 2) = 1;
  return g;
}

Mat controlled_u(const GateParams& p) {
  const double ct = std::cos(p.theta / 2.0);
  const double st = std::sin(p.theta / 2.0);
  auto ephase = [](double a) { return std::exp(cplx(0, a)); };
  Mat g = Mat::Zero(4, 4);
  g(0, 0) = 1;
  g(2, 2) = 1;
  g(1, 1) = ephase(p.gamma) * ct;
  g(1, 3) = -ephase(p.gamma + p.lambda) * st;
  g(3, 1) = ephase(p.gamma + p.phi) * st;
  g(3, 3) = ephase(p.gamma + p.phi + p.lambda) * ct;
  return g;
}

Mat embed_pair(const Mat& gate, int q_hi, int q_lo, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  Mat out = Mat::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const int v = 2 * bit_of(col, q_hi, n_qubits) + bit_of(col, q_lo, n_qubits);
    for (int w = 0; w < 4; ++w) {
      const cplx amp = gate(w, v);
      if (amp == cplx(0, 0)) continue;
      std::size_t row = with_bit(col, q_hi, n_qubits, w >> 1);
      row = with_bit(row, q_lo, n_qubits, w & 1);
      out(row, col) = amp;
    }
  }
  return out;
}

Mat pauli_z(int qubit, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  Mat out = Mat::Zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out(i, i) = bit_of(i, qubit, n_qubits) ? -1.0 : 1.0;
  }
  return out;
}

}  // namespace qrc
