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

#include "qrc/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace qrc {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
constexpr double kDivergenceBound = 1e6;

// Computes y[0..n_out-1] of the recursion (n_out may exceed len(u) by one,
// which is what the shifted regression target needs).
std::vector<double> narma_series(const std::vector<double>& u, const NarmaSpec& spec,
                                 std::size_t n_out) {
  const int n = spec.variant;
  if (n != 2 && n != 5 && n != 10) throw std::invalid_argument("NARMA variant must be 2, 5, or 10");
  if (u.size() < static_cast<std::size_t>(n)) throw std::invalid_argument("input shorter than NARMA order");

  std::vector<double> y(n_out, 0.0);
  auto at = [&](std::ptrdiff_t i) { return i < 0 ? 0.0 : y[static_cast<std::size_t>(i)]; };

  for (std::size_t t = (n == 2 ? 0 : static_cast<std::size_t>(n - 1)); t + 1 < n_out; ++t) {
    double next;
    if (n == 2) {
      next = 0.4 * y[t] + 0.4 * y[t] * at(static_cast<std::ptrdiff_t>(t) - 1) +
             0.6 * u[t] * u[t] * u[t] + 0.1;
    } else {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += at(static_cast<std::ptrdiff_t>(t) - i);
      next = spec.alpha * y[t] + spec.beta * y[t] * acc +
             spec.gamma * u[t - (n - 1)] * u[t] + spec.delta;
    }
    if (!std::isfinite(next) || std::abs(next) > kDivergenceBound)
      throw std::runtime_error("NARMA series diverged at step " + std::to_string(t + 1));
    y[t + 1] = next;
  }
  return y;
}

}  // namespace

std::vector<double> gen_input(std::size_t length, const InputParams& p) {
  if (length < 1) throw std::invalid_argument("input length must be >= 1");
  std::vector<double> u(length);
  for (std::size_t t = 0; t < length; ++t) {
    const double x = static_cast<double>(t) / p.period;
    u[t] = 0.1 * (std::sin(kTwoPi * p.alpha * x) * std::sin(kTwoPi * p.beta * x) *
                      std::sin(kTwoPi * p.gamma * x) +
                  1.0);
  }
  return u;
}

std::vector<double> gen_narma(const std::vector<double>& u, const NarmaSpec& spec) {
  return narma_series(u, spec, u.size());
}

std::vector<double> gen_narma_target(const std::vector<double>& u, const NarmaSpec& spec) {
  std::vector<double> y = narma_series(u, spec, u.size() + 1);
  return std::vector<double>(y.begin() + 1, y.end());
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_field(const std::string& field, std::size_t line_no) {
  const std::string f = strip(field);
  if (f.empty()) throw std::runtime_error("empty field at line " + std::to_string(line_no));
  char* end = nullptr;
  const double v = std::strtod(f.c_str(), &end);
  if (end != f.c_str() + f.size() || !std::isfinite(v))
    throw std::runtime_error("bad numeric value '" + f + "' at line " + std::to_string(line_no));
  return v;
}

}  // namespace

SeriesBundle load_csv(const std::string& path, bool normalize_u) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CSV file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV file: " + path);
  {
    std::string header = strip(line);
    header.erase(std::remove(header.begin(), header.end(), ' '), header.end());
    if (header != "t,u,y")
      throw std::runtime_error("expected header 't,u,y', got '" + strip(line) + "'");
  }

  SeriesBundle bundle;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    std::size_t c1 = line.find(',');
    std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        line.find(',', c2 + 1) != std::string::npos)
      throw std::runtime_error("expected 3 fields at line " + std::to_string(line_no));
    const double t = parse_field(line.substr(0, c1), line_no);
    const double u = parse_field(line.substr(c1 + 1, c2 - c1 - 1), line_no);
    const double y = parse_field(line.substr(c2 + 1), line_no);
    if (!bundle.t.empty() && t <= bundle.t.back())
      throw std::runtime_error("non-increasing t at line " + std::to_string(line_no));
    bundle.t.push_back(t);
    bundle.u.push_back(u);
    bundle.y.push_back(y);
  }
  if (bundle.t.empty()) throw std::runtime_error("CSV has no data rows: " + path);

  if (normalize_u) {
    double lo = bundle.u[0], hi = bundle.u[0];
    for (double v : bundle.u) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi <= lo) throw std::runtime_error("cannot normalize constant u column");
    for (double& v : bundle.u) v = (v - lo) / (hi - lo);
    bundle.u_normalized = true;
    bundle.u_min = lo;
    bundle.u_max = hi;
  }
  return bundle;
}

}  // namespace qrc
