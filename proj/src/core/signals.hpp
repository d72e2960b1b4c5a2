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

#ifndef CRYOBUDGET_CORE_SIGNALS_HPP
#define CRYOBUDGET_CORE_SIGNALS_HPP

#include <string>
#include <vector>

namespace cryo {

struct PulseSpec {
  double sigma_s = 5e-9;
  double duration_s = 30e-9;
  double qubit_omega = 2.0 * 3.14159265358979323846 * 5e9;  // rad/s
  double t1_limit_s = 0.5e-3;
  double duty_cycle = 0.33;
  double pi_half_share = 0.5;

  std::vector<std::string> warnings() const;
};

struct PulsePowers {
  double rabi_omega0 = 0;  // rad/s
  double peak_W = 0;
  double average_W = 0;     // over one Gaussian pulse window
  double line_average_W = 0;  // including duty cycle and pi/2 share
};

PulsePowers pi_pulse_powers(const PulseSpec& pulse);

/// Peak drive power quoted in the source text for the default pulse. The
/// printed formula evaluates about 10 dB lower; reports carry both.
inline constexpr double kQuotedPeakDbm = -66.0;

struct FluxBiasSpec {
  double r_eff_mxc_ohm = 0.15;
  double r_eff_cp_ohm = 0.42;
  double i_max_A = 1e-3;
  double pulse_amplitude_A = 0.2e-3;
  double pulse_duty = 0.33;

  void validate() const;
  static FluxBiasSpec measured();            // 0.2 mA pulses
  static FluxBiasSpec measured_large_pulse();  // 0.4 mA pulses
};

struct StagePair {
  double mxc_W = 0;
  double cp_W = 0;
};

StagePair flux_bias_load(const FluxBiasSpec& spec, double current_A);
StagePair flux_bias_average_load(const FluxBiasSpec& spec);
StagePair flux_pulse_load(const FluxBiasSpec& spec);

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_SIGNALS_HPP
