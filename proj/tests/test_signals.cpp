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

#include <cmath>

#include "core/signals.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cryo;
using cryo::testing::Gen;
using cryo::testing::rel_diff;

TEST_CASE("pi pulse amplitude and power ordering") {
  const auto p = pi_pulse_powers(PulseSpec{});
  CHECK(rel_diff(p.rabi_omega0, std::sqrt(3.14159265358979323846 / (2 * 25e-18))) < 1e-14);
  CHECK(p.line_average_W <= p.average_W);
  CHECK(p.average_W <= p.peak_W);
}

TEST_CASE("pulse power ordering holds for random valid specs") {
  Gen g(11);
  for (int t = 0; t < 500; ++t) {
    PulseSpec s;
    s.sigma_s = g.log_uniform(1e-9, 1e-7);
    s.duration_s = 6 * s.sigma_s;
    s.qubit_omega = 2 * 3.14159265358979323846 * g.uniform(3e9, 9e9);
    s.t1_limit_s = g.log_uniform(1e-5, 1e-2);
    s.duty_cycle = g.uniform(0, 1);
    s.pi_half_share = g.uniform(0, 1);
    const auto p = pi_pulse_powers(s);
    CHECK(p.line_average_W <= p.average_W);
    CHECK(p.average_W <= p.peak_W);
  }
}

TEST_CASE("short pulses carry a warning and bad specs throw") {
  PulseSpec s;
  s.duration_s = 20e-9;
  CHECK_FALSE(s.warnings().empty());
  s.duty_cycle = 1.5;
  CHECK_THROWS_AS(pi_pulse_powers(s), Error);
}

TEST_CASE("flux bias average matches a numeric average over the current range") {
  FluxBiasSpec s;
  const int n = 100000;
  double mxc = 0;
  for (int k = 0; k < n; ++k) mxc += flux_bias_load(s, s.i_max_A * (k + 0.5) / n).mxc_W;
  mxc /= n;
  CHECK(rel_diff(flux_bias_average_load(s).mxc_W, mxc) < 1e-3);
}

TEST_CASE("flux loads scale quadratically in current and linearly in duty") {
  FluxBiasSpec s;
  const auto a = flux_bias_load(s, 0.3e-3);
  const auto b = flux_bias_load(s, 0.6e-3);
  CHECK(rel_diff(b.mxc_W, 4 * a.mxc_W) < 1e-12);
  CHECK(rel_diff(b.cp_W, 4 * a.cp_W) < 1e-12);
  FluxBiasSpec d = s;
  d.pulse_duty = s.pulse_duty / 2;
  CHECK(rel_diff(flux_pulse_load(d).mxc_W, flux_pulse_load(s).mxc_W / 2) < 1e-12);
  FluxBiasSpec big = FluxBiasSpec::measured_large_pulse();
  CHECK(rel_diff(flux_pulse_load(big).cp_W, 4 * flux_pulse_load(s).cp_W) < 1e-12);
}

TEST_CASE("negative resistance is rejected") {
  FluxBiasSpec s;
  s.r_eff_cp_ohm = -0.1;
  CHECK_THROWS_AS(flux_bias_average_load(s), Error);
}
