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

#ifndef QRC_TIPC_HPP
#define QRC_TIPC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qrc/linalg.hpp"

namespace qrc {

struct TipcConfig {
  int max_degree = 4;        // input-monomial total degree bound
  int max_delay = 10;        // number of input delays (u_t .. u_{t-max_delay+1})
  bool state_mix = true;     // append degree-1 state terms and state x input terms
  double significance = 0.05;
};

// One polynomial basis function of the input and (optionally) state history:
//   prod_d u_{t-d}^{input_exponents[d]}  *  (state_component >= 0
//                                            ? x_{state_component, t-state_lag} : 1)
struct BasisTerm {
  std::vector<int> input_exponents;
  int state_component = -1;
  int state_lag = 1;

  int input_order() const;
  int state_order() const { return state_component >= 0 ? 1 : 0; }
  bool time_invariant() const { return state_order() == 0; }
  std::string label() const;
};

struct CapacityEntry {
  BasisTerm term;
  double capacity = 0.0;        // Gram-Schmidt form ||P_w^T xi||^2
  double capacity_lsq = 0.0;    // regression form 1 - min_w ||xi - X w||^2 / ||xi||^2
  bool survived = false;        // capacity >= threshold after truncation
};

struct CapacityReport {
  std::vector<CapacityEntry> entries;
  int rank = 0;                 // numerical rank of the raw state matrix
  std::size_t window = 0;       // usable timesteps after delay alignment
  double threshold = 0.0;       // chi^2 truncation level, 0 before truncation
  double significance = 0.0;
  double c_tot = 0.0;           // totals over surviving entries
  double c_time_invariant = 0.0;
  double c_time_variant = 0.0;
  int richness = 0;             // surviving input-only terms
};

// Compact SVD normalization of a T x N state matrix: returns the T x r matrix
// of orthonormal state directions and the numerical rank r (singular values
// above kRankCutoff * sigma_max).
std::pair<RMat, int> normalize_states(const RMat& X);

// Enumerates basis terms ordered by (total degree, exponent profile):
// input-only monomials with 1 <= degree <= max_degree over max_delay delays,
// then (with state_mix) pure state terms x_{k,t-1} and products of x_{k,t-1}
// with input monomials of degree <= max_degree - 1.
std::vector<BasisTerm> enumerate_basis(const TipcConfig& cfg, int state_rank);

// Evaluates every term over the window [max_delay, T), orthonormalizes the
// columns in order (two-pass Gram-Schmidt behind a constant column, so
// capacities are measured net of means), and computes each term's capacity in
// both formulations. Pre-truncation: threshold is left at 0 and every entry
// with nonzero capacity is marked surviving.
CapacityReport compute_capacities(const RMat& P, const std::vector<double>& u,
                                  const std::vector<BasisTerm>& terms, int t0);

// (1/window) * quantile_{1-significance} of chi^2 with `rank` degrees of
// freedom: the capacity a pure-noise basis function exceeds with probability
// `significance`.
double chi2_threshold(std::size_t window, int rank, double significance);

// Zeroes entries below the chi^2 threshold and recomputes totals, classes,
// and richness.
void threshold_and_truncate(CapacityReport& report, double significance);

std::string report_to_json(const CapacityReport& report, bool surviving_only = true);

}  // namespace qrc

#endif  // QRC_TIPC_HPP
