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

#include "qrc/reservoir.hpp"

#include <cmath>
#include <stdexcept>

#include "qrc/channels.hpp"
#include "qrc/parallel.hpp"

namespace qrc {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::ensemble: return "ensemble";
    case Mode::trajectory: return "trajectory";
    case Mode::baseline: return "baseline";
  }
  throw std::logic_error("unknown mode");
}

Mode mode_from_string(const std::string& s) {
  if (s == "ensemble") return Mode::ensemble;
  if (s == "trajectory") return Mode::trajectory;
  if (s == "baseline") return Mode::baseline;
  throw std::invalid_argument("unknown mode: " + s);
}

Mat system_unitary(double u, double input_scale) {
  const double s = input_scale * u;
  const Mat id2 = Mat::Identity(2, 2);
  const Mat cx = cnot();
  return cx * kron(rx(s), rz(s)) * cx * kron(rx(s), id2);
}

Mat build_block_unitary(double u, double input_scale, const GateParams& coupling) {
  const Mat usys16 = kron(system_unitary(u, input_scale), Mat::Identity(4, 4));
  const Mat cu = controlled_u(coupling);
  const Mat read0 = embed_pair(cu, /*q_hi=*/2, /*q_lo=*/0, 4);  // sys0 -> anc2
  const Mat read1 = embed_pair(cu, /*q_hi=*/3, /*q_lo=*/1, 4);  // sys1 -> anc3
  return read1 * read0 * usys16;
}

namespace {

void validate(const ReservoirConfig& cfg) {
  if (cfg.n_blocks < 1) throw std::invalid_argument("n_blocks must be >= 1");
  if (cfg.mode == Mode::trajectory && cfg.shots < 1)
    throw std::invalid_argument("shots must be >= 1");
  if (cfg.baseline_damping < 0.0 || cfg.baseline_damping > 1.0)
    throw std::invalid_argument("baseline_damping must be in [0, 1]");
}

std::vector<Mat> step_unitaries(const std::vector<double>& u, const ReservoirConfig& cfg) {
  std::vector<Mat> us;
  us.reserve(u.size());
  for (double ut : u) us.push_back(build_block_unitary(ut, cfg.input_scale, cfg.coupling));
  return us;
}

RMat run_ensemble(const std::vector<double>& u, const ReservoirConfig& cfg) {
  const std::size_t T = u.size();
  const std::vector<Mat> us = step_unitaries(u, cfg);
  RMat features(T, 2 * cfg.n_blocks);
  for (int b = 0; b < cfg.n_blocks; ++b) {
    Mat rho = Mat::Zero(4, 4);
    rho(0, 0) = 1.0;
    for (std::size_t t = 0; t < T; ++t) {
      const auto [f0, f1] = step_ensemble(rho, us[t]);
      features(t, 2 * b) = f0;
      features(t, 2 * b + 1) = f1;
    }
  }
  return features;
}

RMat run_trajectory(const std::vector<double>& u, const ReservoirConfig& cfg) {
  const std::size_t T = u.size();
  const std::vector<Mat> us = step_unitaries(u, cfg);
  const std::size_t n_traj = static_cast<std::size_t>(cfg.n_blocks) * cfg.shots;
  const unsigned workers = worker_count(n_traj, cfg.threads);

  // ones[w] counts -1 outcomes per (t, feature); integer merge makes the
  // result independent of the worker split.
  std::vector<std::vector<std::int64_t>> ones(
      workers, std::vector<std::int64_t>(T * 2 * cfg.n_blocks, 0));

  parallel_for_chunks(n_traj, cfg.threads, [&](std::size_t begin, std::size_t end, unsigned w) {
    auto& acc = ones[w];
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t block = idx / cfg.shots;
      const std::size_t shot = idx % cfg.shots;
      Rng rng(mix_seed(cfg.seed, block, shot));
      Vec psi = Vec::Zero(4);
      psi(0) = 1.0;
      for (std::size_t t = 0; t < T; ++t) {
        const auto [o0, o1] = step_trajectory(psi, us[t], rng);
        if (o0 < 0) ++acc[t * 2 * cfg.n_blocks + 2 * block];
        if (o1 < 0) ++acc[t * 2 * cfg.n_blocks + 2 * block + 1];
      }
    }
  });

  RMat features(T, 2 * cfg.n_blocks);
  for (std::size_t t = 0; t < T; ++t) {
    for (int f = 0; f < 2 * cfg.n_blocks; ++f) {
      std::int64_t n1 = 0;
      for (unsigned w = 0; w < workers; ++w) n1 += ones[w][t * 2 * cfg.n_blocks + f];
      features(t, f) = 1.0 - 2.0 * static_cast<double>(n1) / static_cast<double>(cfg.shots);
    }
  }
  return features;
}

}  // namespace

std::pair<double, double> step_ensemble(Mat& rho, const Mat& block_unitary) {
  Mat anc = Mat::Zero(4, 4);
  anc(0, 0) = 1.0;
  Mat full = block_unitary * kron(rho, anc) * block_unitary.adjoint();

  double f0 = 0.0, f1 = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    const double p = full(i, i).real();
    f0 += (bit_of(i, 2, 4) ? -1.0 : 1.0) * p;
    f1 += (bit_of(i, 3, 4) ? -1.0 : 1.0) * p;
  }

  Mat next = Mat::Zero(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int a = 0; a < 4; ++a) next(r, c) += full(4 * r + a, 4 * c + a);
  rho = std::move(next);
  return {f0, f1};
}

std::pair<int, int> step_trajectory(Vec& psi, const Mat& block_unitary, Rng& rng) {
  Vec full = Vec::Zero(16);
  for (int r = 0; r < 4; ++r) full(4 * r) = psi(r);
  full = block_unitary * full;

  double probs[4];
  for (int m = 0; m < 4; ++m) {
    double p = 0.0;
    for (int r = 0; r < 4; ++r) p += std::norm(full(4 * r + m));
    probs[m] = p;
  }

  const double x = rng.uniform();
  int m = 3;
  double cum = 0.0;
  for (int k = 0; k < 4; ++k) {
    cum += probs[k];
    if (x < cum) {
      m = k;
      break;
    }
  }

  const double norm = std::sqrt(probs[m]);
  for (int r = 0; r < 4; ++r) psi(r) = full(4 * r + m) / norm;
  return {1 - 2 * (m >> 1), 1 - 2 * (m & 1)};
}

RMat run_reservoir(const std::vector<double>& u, const ReservoirConfig& cfg) {
  validate(cfg);
  if (u.empty()) throw std::invalid_argument("input sequence is empty");
  switch (cfg.mode) {
    case Mode::ensemble: return run_ensemble(u, cfg);
    case Mode::trajectory: return run_trajectory(u, cfg);
    case Mode::baseline: return run_baseline(u, cfg);
  }
  throw std::logic_error("unknown mode");
}

RMat run_baseline(const std::vector<double>& u, const ReservoirConfig& cfg) {
  validate(cfg);
  const std::size_t T = u.size();
  const auto kraus = amplitude_damping_kraus(cfg.baseline_damping);
  RMat features(T, 2 * cfg.n_blocks);
  for (int b = 0; b < cfg.n_blocks; ++b) {
    Mat rho = Mat::Zero(4, 4);
    rho(0, 0) = 1.0;
    for (std::size_t t = 0; t < T; ++t) {
      const Mat usys = system_unitary(u[t], cfg.input_scale);
      rho = usys * rho * usys.adjoint();
      rho = apply_single_qubit_channel(rho, kraus, 0, 2);
      rho = apply_single_qubit_channel(rho, kraus, 1, 2);
      double f0 = 0.0, f1 = 0.0;
      for (std::size_t i = 0; i < 4; ++i) {
        const double p = rho(i, i).real();
        f0 += (bit_of(i, 0, 2) ? -1.0 : 1.0) * p;
        f1 += (bit_of(i, 1, 2) ? -1.0 : 1.0) * p;
      }
      features(t, 2 * b) = f0;
      features(t, 2 * b + 1) = f1;
    }
  }
  return features;
}

}  // namespace qrc
