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

#ifndef CRYOBUDGET_CORE_NOISE_HPP
#define CRYOBUDGET_CORE_NOISE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core/materials.hpp"
#include "core/model.hpp"

namespace cryo {

inline constexpr double kDefaultSignalFrequency = 6e9;  // Hz

/// Bose-Einstein occupation 1/(exp(h nu / kT) - 1); zero at T = 0.
double bose_einstein(double temperature_K, double frequency_Hz);

/// Two-sided voltage noise density of a resistor, quantum corrected.
double thermal_voltage_psd(double temperature_K, double resistance_ohm, double frequency_Hz);

struct DiscreteAttenuator {
  double attenuation = 1;  // linear power ratio, >= 1
  double temperature_K = 0;
  std::string label;
};

/// Lossy cable with a linear temperature gradient along its length.
struct DistributedSegment {
  double attenuation_dB = 0;
  double t_start_K = 0;
  double t_end_K = 0;
  std::string label;
};

using ChainElement = std::variant<DiscreteAttenuator, DistributedSegment>;

struct AttenuatorChain {
  std::vector<ChainElement> elements;  // in signal direction
};

struct PhotonNumberProfile {
  double frequency_Hz = 0;
  std::vector<double> n;  // n[0] is the input, n[k] follows element k
  std::vector<std::string> labels;

  double output() const { return n.back(); }
};

/// Propagates the occupation through the chain. `n_input` defaults to the
/// room temperature occupation.
PhotonNumberProfile cascade_photon_number(const AttenuatorChain& chain, double frequency_Hz,
                                          std::optional<double> n_input = std::nullopt);

/// Output occupation of a distributed segment. Slices are doubled from 1024
/// until successive results agree to 1e-9 relative.
double distributed_segment_output(const DistributedSegment& segment, double frequency_Hz,
                                  double n_in, int* slices_used = nullptr);

/// Attenuation per stage that brings n_BE(T_{i-1}) down to n_BE(T_i).
std::vector<double> reference_attenuation(const FridgeModel& fridge, double frequency_Hz);

/// Noise chain for a line. Components become discrete attenuators at their
/// plate temperature; with `with_cable_loss` the cable runs between plates
/// are added as distributed segments.
AttenuatorChain line_noise_chain(const LineSpec& line, const FridgeModel& fridge,
                                 const Catalog& catalog, double frequency_Hz, bool with_cable_loss);

enum class PsdConvention { two_sided, one_sided };

/// Current noise after an attenuator at the 4K plate, S(T) = 2 kT / R
/// (doubled for the one-sided convention).
double current_noise_psd(double attenuation_4k, double t_rt_K, double t_4k_K, double resistance_ohm,
                         PsdConvention convention = PsdConvention::two_sided);

struct FluxCoupling {
  double mutual_inductance = 500.0;  // flux quanta per ampere
  double sweet_spot_omega = 2.0 * 3.14159265358979323846 * 5e9;  // rad/s
  double flux = 0;                                              // flux quanta
};

/// d omega / d I at the bias point, rad s^-1 A^-1.
double flux_sensitivity(const FluxCoupling& coupling);

/// Bias flux (in flux quanta) at which the frequency drops by `fraction`.
double flux_for_detuning(double fraction);

struct DephasingBounds {
  double t2_star_s = 0;
  double t2_echo_s = 0;
};

/// Empty when D = 0: the bound is unlimited.
std::optional<DephasingBounds> dephasing_bounds(double current_psd, double sensitivity);

/// Sweet-spot frequency that reproduces a given T2* for a noise density,
/// mutual inductance and bias flux.
double calibrate_sweet_spot_omega(double t2_star_s, double current_psd, double mutual_inductance,
                                  double flux);

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_NOISE_HPP
