// Copyright 2026 The cryobudget Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "properties.hpp"

using namespace cryo::testing;

namespace {

void require(const Outcome& o) {
  INFO(o.detail);
  INFO("worst deviation " << o.worst);
  CHECK(o.ok);
}

}  // namespace

TEST_CASE("cascade fixed point at uniform temperature") { require(cascade_fixed_point(101, 5000)); }

TEST_CASE("conductivity integral is additive over subintervals") { require(quadrature_additivity(202, 20000)); }

TEST_CASE("load extraction inverts the forward response") { require(calibration_roundtrip(303, 5000)); }

TEST_CASE("reference fit recovers synthetic coefficients") { require(calibration_fit_roundtrip(404, 2000)); }

TEST_CASE("enumeration equals the brute-force oracle") { require(enumeration_matches_oracle(505, 200)); }

TEST_CASE("signal power is conserved along every line") { require(energy_conservation(606, 20000)); }
