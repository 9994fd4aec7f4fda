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

#include <algorithm>
#include <cmath>
#include <limits>

#include <doctest.h>

#include "qrc/readout.hpp"
#include "qrc/rng.hpp"

using namespace qrc;

namespace {

RMat random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  RMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
  return m;
}

// Minimal-cost warping path by explicit recursion; exponential, for tiny
// series only.
double dtw_brute(const RVec& s, const RVec& t, Eigen::Index i, Eigen::Index j) {
  const double cost = std::abs(s(i) - t(j));
  if (i == 0 && j == 0) return cost;
  double best = std::numeric_limits<double>::infinity();
  if (i > 0 && j > 0) best = std::min(best, dtw_brute(s, t, i - 1, j - 1));
  if (i > 0) best = std::min(best, dtw_brute(s, t, i - 1, j));
  if (j > 0) best = std::min(best, dtw_brute(s, t, i, j - 1));
  return cost + best;
}

}  // namespace

TEST_SUITE("readout") {

TEST_CASE("full-rank fit recovers the generating weights") {
  Rng rng(41);
  RMat x = random_matrix(50, 4, rng);
  x.col(3).setOnes();
  RVec w_true(4);
  w_true << 0.7, -1.2, 0.25, 0.4;
  const RVec y = x * w_true;

  const FitResult fit = fit_readout(x, y);
  CHECK(fit.rank == 4);
  CHECK((fit.weights - w_true).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(fit.train_mse <= 1e-20);
  CHECK((predict(x, fit.weights) - y).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("rank-deficient fit picks the minimum-norm solution") {
  Rng rng(43);
  RVec base(30);
  for (Eigen::Index i = 0; i < 30; ++i) base(i) = rng.uniform(-1.0, 1.0);
  RMat x(30, 2);
  x.col(0) = base;
  x.col(1) = base;

  const FitResult fit = fit_readout(x, base);
  CHECK(fit.rank == 1);
  CHECK(fit.weights(0) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(fit.weights(1) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(fit.train_mse <= 1e-20);
}

TEST_CASE("no random perturbation improves the training error") {
  Rng rng(47);
  const RMat x = random_matrix(40, 5, rng);
  RVec y(40);
  for (Eigen::Index i = 0; i < 40; ++i) y(i) = rng.uniform(-1.0, 1.0);

  const FitResult fit = fit_readout(x, y);
  const double sse0 = (x * fit.weights - y).squaredNorm();
  for (int k = 0; k < 50; ++k) {
    RVec delta(5);
    for (Eigen::Index i = 0; i < 5; ++i) delta(i) = rng.uniform(-1e-3, 1e-3);
    const double sse = (x * (fit.weights + delta) - y).squaredNorm();
    CHECK(sse >= sse0 - 1e-12);
  }
}

TEST_CASE("ridge solves the regularized normal equations") {
  Rng rng(53);
  const RMat x = random_matrix(60, 4, rng);
  RVec y(60);
  for (Eigen::Index i = 0; i < 60; ++i) y(i) = rng.uniform(-1.0, 1.0);

  const double ridge = 0.3;
  const FitResult fit = fit_readout(x, y, ridge);
  const RMat lhs = x.transpose() * x + ridge * RMat::Identity(4, 4);
  const RVec expected = lhs.ldlt().solve(x.transpose() * y);
  CHECK((fit.weights - expected).cwiseAbs().maxCoeff() <= 1e-10);

  const FitResult plain = fit_readout(x, y, 0.0);
  CHECK(fit.weights.norm() <= plain.weights.norm() + 1e-12);
}

TEST_CASE("prediction error is the plain mean squared error") {
  RVec y(2), p(2);
  y << 0.0, 0.0;
  p << 1.0, 1.0;
  CHECK(nmse_paper(y, p) == doctest::Approx(1.0).epsilon(1e-15));
  y << 1.0, 3.0;
  p << 2.0, 1.0;
  CHECK(nmse_paper(y, p) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("warping distance on fixed examples") {
  RVec a(1), b(1);
  a << 0.0;
  b << 1.0;
  CHECK(dtw_distance(a, b) == doctest::Approx(1.0).epsilon(1e-15));

  RVec s(3), t(4);
  s << 1.0, 2.0, 3.0;
  t << 1.0, 2.0, 2.0, 3.0;
  CHECK(dtw_distance(s, t) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(dtw_distance(s, s) == 0.0);
}

TEST_CASE("warping distance is symmetric and matches brute force") {
  Rng rng(59);
  for (int rep = 0; rep < 40; ++rep) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.uniform() * 5);
    const Eigen::Index m = 1 + static_cast<Eigen::Index>(rng.uniform() * 5);
    RVec s(n), t(m);
    for (Eigen::Index i = 0; i < n; ++i) s(i) = std::floor(rng.uniform(0.0, 4.0));
    for (Eigen::Index j = 0; j < m; ++j) t(j) = std::floor(rng.uniform(0.0, 4.0));

    const double d = dtw_distance(s, t);
    CHECK(d == doctest::Approx(dtw_brute(s, t, n - 1, m - 1)).epsilon(1e-12));
    CHECK(d == doctest::Approx(dtw_distance(t, s)).epsilon(1e-12));
  }
}

}  // TEST_SUITE
