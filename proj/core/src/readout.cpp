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

#include "qrc/readout.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qrc {

FitResult fit_readout(const RMat& X, const RVec& y, double ridge) {
  if (X.rows() != y.size()) throw std::invalid_argument("design/target row mismatch");
  if (X.rows() == 0) throw std::invalid_argument("empty design matrix");

  FitResult result;
  if (ridge > 0.0) {
    const RMat gram = X.transpose() * X + ridge * RMat::Identity(X.cols(), X.cols());
    result.weights = gram.ldlt().solve(X.transpose() * y);
    result.rank = X.cols();
  } else {
    Eigen::BDCSVD<RMat> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(kRankCutoff);
    result.weights = svd.solve(y);
    result.rank = svd.rank();
  }
  result.train_mse = (y - X * result.weights).squaredNorm() / static_cast<double>(y.size());
  return result;
}

RVec predict(const RMat& X, const RVec& weights) {
  if (X.cols() != weights.size()) throw std::invalid_argument("design/weight size mismatch");
  return X * weights;
}

double nmse_paper(const RVec& y, const RVec& y_hat) {
  if (y.size() != y_hat.size()) throw std::invalid_argument("series length mismatch");
  if (y.size() == 0) throw std::invalid_argument("empty series");
  return (y - y_hat).squaredNorm() / static_cast<double>(y.size());
}

double dtw_distance(const RVec& s, const RVec& t) {
  const Eigen::Index m = s.size();
  const Eigen::Index n = t.size();
  if (m == 0 || n == 0) throw std::invalid_argument("empty series");

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> prev(static_cast<std::size_t>(n) + 1, inf);
  std::vector<double> cur(static_cast<std::size_t>(n) + 1, inf);
  prev[0] = 0.0;
  for (Eigen::Index i = 1; i <= m; ++i) {
    cur[0] = inf;
    for (Eigen::Index j = 1; j <= n; ++j) {
      const double cost = std::abs(s(i - 1) - t(j - 1));
      cur[j] = cost + std::min({cur[j - 1], prev[j], prev[j - 1]});
    }
    std::swap(prev, cur);
  }
  return prev[static_cast<std::size_t>(n)];
}

}  // namespace qrc
