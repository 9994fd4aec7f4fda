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

#include "qrc/tipc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <nlohmann/json.hpp>

#include "qrc/readout.hpp"

namespace qrc {

int BasisTerm::input_order() const {
  return std::accumulate(input_exponents.begin(), input_exponents.end(), 0);
}

std::string BasisTerm::label() const {
  std::string out;
  for (std::size_t d = 0; d < input_exponents.size(); ++d) {
    if (input_exponents[d] == 0) continue;
    if (!out.empty()) out += "*";
    out += d == 0 ? "u[t]" : "u[t-" + std::to_string(d) + "]";
    if (input_exponents[d] > 1) out += "^" + std::to_string(input_exponents[d]);
  }
  if (state_component >= 0) {
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(state_component) + "[t-" + std::to_string(state_lag) + "]";
  }
  return out;
}

std::pair<RMat, int> normalize_states(const RMat& X) {
  if (X.rows() < 2) throw std::invalid_argument("state matrix needs at least 2 rows");
  Eigen::BDCSVD<RMat> svd(X, Eigen::ComputeThinU);
  const RVec& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) throw std::invalid_argument("zero state matrix");
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kRankCutoff * sv(0)) ++r;
  }
  return {svd.matrixU().leftCols(r), r};
}

namespace {

// All monomials over max_delay delays with 1 <= total degree <= max_degree,
// ordered by total degree and, within a degree, by recency (u[t] before
// u[t-1], ...). The Gram-Schmidt sweep follows this order, so shared variance
// is attributed to the lowest-order, most recent term that explains it.
void enumerate_monomials(int max_delay, int max_degree,
                         std::vector<std::vector<int>>& out) {
  out.clear();
  std::vector<int> e(max_delay, 0);
  auto walk = [&](auto&& self, int d, int total) -> void {
    if (d == max_delay) {
      if (total >= 1) out.push_back(e);
      return;
    }
    for (int v = 0; total + v <= max_degree; ++v) {
      e[d] = v;
      self(self, d + 1, total + v);
    }
    e[d] = 0;
  };
  walk(walk, 0, 0);
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;
  });
}

}  // namespace

std::vector<BasisTerm> enumerate_basis(const TipcConfig& cfg, int state_rank) {
  if (cfg.max_degree < 1 || cfg.max_delay < 1)
    throw std::invalid_argument("max_degree and max_delay must be >= 1");

  std::vector<BasisTerm> terms;
  std::vector<std::vector<int>> monomials;
  enumerate_monomials(cfg.max_delay, cfg.max_degree, monomials);
  for (auto& m : monomials) {
    BasisTerm t;
    t.input_exponents = m;
    terms.push_back(std::move(t));
  }

  if (cfg.state_mix && state_rank > 0) {
    for (int k = 0; k < state_rank; ++k) {
      BasisTerm t;
      t.input_exponents.assign(cfg.max_delay, 0);
      t.state_component = k;
      terms.push_back(std::move(t));
    }
    if (cfg.max_degree >= 2) {
      std::vector<std::vector<int>> mixed;
      enumerate_monomials(cfg.max_delay, cfg.max_degree - 1, mixed);
      for (auto& m : mixed) {
        for (int k = 0; k < state_rank; ++k) {
          BasisTerm t;
          t.input_exponents = m;
          t.state_component = k;
          terms.push_back(t);
        }
      }
    }
  }
  return terms;
}

CapacityReport compute_capacities(const RMat& P, const std::vector<double>& u,
                                  const std::vector<BasisTerm>& terms, int t0) {
  const std::size_t T = u.size();
  if (static_cast<std::size_t>(P.rows()) != T)
    throw std::invalid_argument("state/input length mismatch");
  if (t0 < 1 || static_cast<std::size_t>(t0) >= T)
    throw std::invalid_argument("window too short for the requested delays");

  const std::size_t W = T - static_cast<std::size_t>(t0);
  const RMat Pw = P.middleRows(t0, static_cast<Eigen::Index>(W));

  // Orthonormal basis of the window-restricted state span; both capacity
  // formulations project onto span(Pw), so they agree to rounding.
  Eigen::BDCSVD<RMat> svd(Pw, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVec& sv = svd.singularValues();
  int rw = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > kRankCutoff * sv(0)) ++rw;
  const RMat Uw = svd.matrixU().leftCols(rw);
  const RMat Vw = svd.matrixV().leftCols(rw);
  const RVec sw_inv = sv.head(rw).cwiseInverse();

  CapacityReport report;
  report.rank = static_cast<int>(P.cols());
  report.window = W;

  // Gram-Schmidt sequence, led by a constant column so every later basis
  // function is evaluated net of its mean.
  RMat xis(W, 1 + terms.size());
  Eigen::Index n_xi = 0;
  xis.col(n_xi++).setConstant(1.0 / std::sqrt(static_cast<double>(W)));

  for (const BasisTerm& term : terms) {
    if (term.state_component >= 0 && term.state_component >= P.cols())
      throw std::invalid_argument("state component out of range");
    if (static_cast<std::size_t>(term.input_exponents.size()) > static_cast<std::size_t>(t0))
      throw std::invalid_argument("window too short for the requested delays");

    RVec c = RVec::Ones(static_cast<Eigen::Index>(W));
    for (std::size_t d = 0; d < term.input_exponents.size(); ++d) {
      const int e = term.input_exponents[d];
      if (e == 0) continue;
      for (std::size_t row = 0; row < W; ++row) {
        const double v = u[static_cast<std::size_t>(t0) + row - d];
        double pw = v;
        for (int q = 1; q < e; ++q) pw *= v;
        c(static_cast<Eigen::Index>(row)) *= pw;
      }
    }
    if (term.state_component >= 0) {
      for (std::size_t row = 0; row < W; ++row)
        c(static_cast<Eigen::Index>(row)) *=
            P(static_cast<Eigen::Index>(static_cast<std::size_t>(t0) + row - term.state_lag),
              term.state_component);
    }

    CapacityEntry entry;
    entry.term = term;
    const double c_norm = c.norm();
    if (c_norm == 0.0) throw std::runtime_error("zero-norm basis column: " + term.label());

    RVec v = c;
    for (int pass = 0; pass < 2; ++pass)
      v -= xis.leftCols(n_xi) * (xis.leftCols(n_xi).transpose() * v);

    const double v_norm = v.norm();
    if (v_norm > 1e-12 * c_norm) {
      const RVec xi = v / v_norm;
      xis.col(n_xi++) = xi;

      const double cap = (Uw.transpose() * xi).squaredNorm();
      entry.capacity = std::clamp(cap, 0.0, 1.0);

      const RVec w = Vw * (sw_inv.asDiagonal() * (Uw.transpose() * xi));
      entry.capacity_lsq = std::clamp(1.0 - (xi - Pw * w).squaredNorm(), 0.0, 1.0);
      entry.survived = true;
    }
    report.entries.push_back(std::move(entry));
  }

  for (const CapacityEntry& e : report.entries) {
    report.c_tot += e.capacity;
    (e.term.time_invariant() ? report.c_time_invariant : report.c_time_variant) += e.capacity;
    if (e.survived && e.term.time_invariant()) ++report.richness;
  }
  return report;
}

double chi2_threshold(std::size_t window, int rank, double significance) {
  if (!(significance > 0.0 && significance < 1.0))
    throw std::invalid_argument("significance must be in (0, 1)");
  if (window == 0 || rank < 1) throw std::invalid_argument("window and rank must be positive");
  const boost::math::chi_squared_distribution<double> dist(static_cast<double>(rank));
  return boost::math::quantile(dist, 1.0 - significance) / static_cast<double>(window);
}

void threshold_and_truncate(CapacityReport& report, double significance) {
  report.significance = significance;
  report.threshold = chi2_threshold(report.window, report.rank, significance);
  report.c_tot = report.c_time_invariant = report.c_time_variant = 0.0;
  report.richness = 0;
  for (CapacityEntry& e : report.entries) {
    e.survived = e.capacity >= report.threshold;
    if (!e.survived) continue;
    report.c_tot += e.capacity;
    (e.term.time_invariant() ? report.c_time_invariant : report.c_time_variant) += e.capacity;
    if (e.term.time_invariant()) ++report.richness;
  }
}

std::string report_to_json(const CapacityReport& report, bool surviving_only) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const CapacityEntry& e : report.entries) {
    if (surviving_only && !e.survived) continue;
    nlohmann::ordered_json j;
    j["label"] = e.term.label();
    j["input_exponents"] = e.term.input_exponents;
    j["input_order"] = e.term.input_order();
    j["state_component"] = e.term.state_component;
    j["state_order"] = e.term.state_order();
    j["class"] = e.term.time_invariant() ? "time-invariant" : "time-variant";
    j["capacity"] = e.capacity;
    j["capacity_regression"] = e.capacity_lsq;
    j["survived"] = e.survived;
    entries.push_back(std::move(j));
  }
  nlohmann::ordered_json j;
  j["rank"] = report.rank;
  j["window"] = report.window;
  j["significance"] = report.significance;
  j["threshold"] = report.threshold;
  j["c_tot"] = report.c_tot;
  j["c_time_invariant"] = report.c_time_invariant;
  j["c_time_variant"] = report.c_time_variant;
  j["richness"] = report.richness;
  j["entries"] = std::move(entries);
  return j.dump(2);
}

}  // namespace qrc
