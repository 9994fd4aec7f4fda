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

#ifndef QRC_READOUT_HPP
#define QRC_READOUT_HPP

#include "qrc/linalg.hpp"

namespace qrc {

// Relative singular-value cutoff shared by all pseudo-inverse solves.
inline constexpr double kRankCutoff = 1e-10;

struct FitResult {
  RVec weights;
  double train_mse = 0.0;
  Eigen::Index rank = 0;
};

// Least-squares readout. X must already contain its bias column. ridge = 0
// solves the minimum-norm least-squares problem through an SVD with singular
// values below kRankCutoff * sigma_max treated as zero; ridge > 0 solves the
// Tikhonov-regularized normal equations instead.
FitResult fit_readout(const RMat& X, const RVec& y, double ridge = 0.0);

RVec predict(const RMat& X, const RVec& weights);

// Mean squared prediction error (no variance normalization).
double nmse_paper(const RVec& y, const RVec& y_hat);

// Dynamic time warping with absolute-difference local cost and unit steps
// (match, insert, delete); no window constraint.
double dtw_distance(const RVec& s, const RVec& t);

}  // namespace qrc

#endif  // QRC_READOUT_HPP
