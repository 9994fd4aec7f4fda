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

#ifndef QRC_TASKS_HPP
#define QRC_TASKS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace qrc {

// u_t = 0.1 * (sin(2 pi alpha t / period) * sin(2 pi beta t / period)
//              * sin(2 pi gamma t / period) + 1), bounded in [0, 0.2].
struct InputParams {
  double alpha = 2.11;
  double beta = 3.73;
  double gamma = 4.11;
  double period = 100.0;
};

std::vector<double> gen_input(std::size_t length, const InputParams& params = {});

struct NarmaSpec {
  int variant = 2;  // 2, 5, or 10
  // Coefficients of the order-n recursion (variants 5 and 10).
  double alpha = 0.3;
  double beta = 0.05;
  double gamma = 1.5;
  double delta = 0.1;
};

// NARMA series driven by u, same length, zero initial history:
//   variant 2:  y[t+1] = 0.4 y[t] + 0.4 y[t] y[t-1] + 0.6 u[t]^3 + 0.1
//   variant n:  y[t+1] = a y[t] + b y[t] (sum_{i<n} y[t-i]) + c u[t-n+1] u[t] + d
// Throws on divergence (|y| > 1e6).
std::vector<double> gen_narma(const std::vector<double>& u, const NarmaSpec& spec);

// One-step-ahead regression target: element t is y[t+1] of the recursion
// above, so a feature row that has seen u[0..t] is paired with the value the
// recursion produces from u[t]. Same length as u.
std::vector<double> gen_narma_target(const std::vector<double>& u, const NarmaSpec& spec);

struct SeriesBundle {
  std::vector<double> t;
  std::vector<double> u;
  std::vector<double> y;
  bool u_normalized = false;
  double u_min = 0.0;
  double u_max = 0.0;
};

// Loads a `t,u,y` CSV (UTF-8, header required, strictly increasing t, finite
// values). With normalize_u, the u column is min-max scaled to [0, 1] and the
// original range recorded.
SeriesBundle load_csv(const std::string& path, bool normalize_u = false);

}  // namespace qrc

#endif  // QRC_TASKS_HPP
