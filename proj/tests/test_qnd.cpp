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

#include <vector>

#include <doctest.h>

#include "qrc/gates.hpp"
#include "qrc/qnd.hpp"
#include "qrc/rng.hpp"

using namespace qrc;

TEST_SUITE("qnd") {

TEST_CASE("repeated ancilla readouts commute in the Heisenberg picture") {
  Rng rng(7);
  std::vector<double> inputs(2);
  for (double& u : inputs) u = rng.uniform(0.0, 0.2);
  for (double strength : {0.0, 3.0, 7.0, 10.0}) {
    const double c = qnd_max_commutator(inputs, 3.14159265358979323846,
                                        GateParams::from_strength(strength));
    CHECK(c <= 1e-10);
  }
}

TEST_CASE("commutation survives generic gate parameters and three steps") {
  Rng rng(11);
  std::vector<double> inputs(3);
  for (double& u : inputs) u = rng.uniform(0.0, 0.2);
  const GateParams generic{1.3, 0.8, 2.1, -0.4};
  CHECK(qnd_max_commutator(inputs, 1.0, generic) <= 1e-10);
}

TEST_CASE("register growth is bounded") {
  CHECK_THROWS(qnd_max_commutator({}, 1.0, GateParams{}));
  CHECK_THROWS(qnd_max_commutator(std::vector<double>(5, 0.1), 1.0, GateParams{}));
}

}  // TEST_SUITE
