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

#ifndef QRC_CHANNELS_HPP
#define QRC_CHANNELS_HPP

#include <array>

#include "qrc/linalg.hpp"

namespace qrc {

// Amplitude damping with decay probability p:
//   K0 = [[1, 0], [0, sqrt(1-p)]],  K1 = [[0, sqrt(p)], [0, 0]].
std::array<Mat, 2> amplitude_damping_kraus(double p);

// Applies a single-qubit Kraus channel to one qubit of an n-qubit density
// matrix.
Mat apply_single_qubit_channel(const Mat& rho, const std::array<Mat, 2>& kraus,
                               int qubit, int n_qubits);

}  // namespace qrc

#endif  // QRC_CHANNELS_HPP
