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

#include "core/signals.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/units.hpp"

namespace cryo {

std::vector<std::string> PulseSpec::warnings() const {
  std::vector<std::string> out;
  if (duration_s < 6.0 * sigma_s) out.push_back("pulse duration shorter than 6 sigma");
  return out;
}

PulsePowers pi_pulse_powers(const PulseSpec& p) {
  if (!(p.sigma_s > 0.0) || !(p.t1_limit_s > 0.0) || !(p.qubit_omega > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "sigma, T1 limit and qubit frequency must be > 0");
  }
  if (!(p.duty_cycle >= 0.0 && p.duty_cycle <= 1.0) ||
      !(p.pi_half_share >= 0.0 && p.pi_half_share <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "duty cycle and pi/2 share must lie in [0, 1]");
  }
  PulsePowers out;
  out.rabi_omega0 = std::sqrt(kPi / (2.0 * p.sigma_s * p.sigma_s));
  out.peak_W = kHbar * p.qubit_omega * p.t1_limit_s * out.rabi_omega0 * out.rabi_omega0 / 4.0;
  out.average_W = std::sqrt(kPi) / 6.0 * out.peak_W;
  out.line_average_W =
      out.average_W * p.duty_cycle * ((1.0 - p.pi_half_share) + 0.25 * p.pi_half_share);
  return out;
}

void FluxBiasSpec::validate() const {
  if (r_eff_mxc_ohm < 0.0 || r_eff_cp_ohm < 0.0) {
    throw Error(ErrorCode::invalid_argument, "effective resistances must be >= 0");
  }
  if (i_max_A < 0.0) throw Error(ErrorCode::invalid_argument, "I_max must be >= 0");
  if (!(pulse_duty >= 0.0 && pulse_duty <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "pulse duty must lie in [0, 1]");
  }
}

FluxBiasSpec FluxBiasSpec::measured() { return {}; }

FluxBiasSpec FluxBiasSpec::measured_large_pulse() {
  FluxBiasSpec s;
  s.pulse_amplitude_A = 0.4e-3;
  return s;
}

StagePair flux_bias_load(const FluxBiasSpec& spec, double current_A) {
  spec.validate();
  const double i2 = current_A * current_A;
  return {spec.r_eff_mxc_ohm * i2, spec.r_eff_cp_ohm * i2};
}

StagePair flux_bias_average_load(const FluxBiasSpec& spec) {
  spec.validate();
  const double i2 = spec.i_max_A * spec.i_max_A / 3.0;
  return {spec.r_eff_mxc_ohm * i2, spec.r_eff_cp_ohm * i2};
}

StagePair flux_pulse_load(const FluxBiasSpec& spec) {
  spec.validate();
  const double i2 = spec.pulse_amplitude_A * spec.pulse_amplitude_A * spec.pulse_duty;
  return {spec.r_eff_mxc_ohm * i2, spec.r_eff_cp_ohm * i2};
}

}  // namespace cryo
