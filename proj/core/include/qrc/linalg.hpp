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

#ifndef QRC_LINALG_HPP
#define QRC_LINALG_HPP

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace qrc {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Qubit convention: tensor factor 0 is the most significant bit of a basis
// index, so for n qubits the basis state |b_0 b_1 ... b_{n-1}> has index
// b_0*2^{n-1} + ... + b_{n-1}.
inline int bit_of(std::size_t index, int qubit, int n_qubits) {
  return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1u);
}

inline std::size_t with_bit(std::size_t index, int qubit, int n_qubits, int value) {
  const std::size_t mask = std::size_t{1} << (n_qubits - 1 - qubit);
  return value ? (index | mask) : (index & ~mask);
}

inline Mat kron(const Mat& a, const Mat& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

inline Mat dag(const Mat& a) { return a.adjoint(); }

inline double max_abs(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

inline bool is_unitary(const Mat& u, double tol = 1e-12) {
  if (u.rows() != u.cols()) return false;
  return max_abs(u.adjoint() * u - Mat::Identity(u.rows(), u.cols())) <= tol;
}

// Trace distance (1/2)||r1 - r2||_1 for Hermitian r1, r2.
inline double trace_distance(const Mat& r1, const Mat& r2) {
  Eigen::SelfAdjointEigenSolver<Mat> es(r1 - r2, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace qrc

#endif  // QRC_LINALG_HPP
