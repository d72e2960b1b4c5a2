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

#ifndef CRYOBUDGET_CORE_MODEL_HPP
#define CRYOBUDGET_CORE_MODEL_HPP

// Fridge, line and response-coefficient types shared by the physics modules.
//
// Positions index the thermal chain from the top: position 0 is the room
// temperature flange and position k (k >= 1) is stages[k - 1].

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cryo {

struct Stage {
  std::string name;
  double temperature_K = 0;
  double cooling_power_W = 0;
  double cable_length_above_m = 0;  // run from the position above

  bool operator==(const Stage&) const = default;
};

/// Linear response of the plates around their base temperatures.
struct ResponseCoefficients {
  std::vector<double> dP_dT;        // per stage, W/K; 0 when unknown
  std::vector<double> dT_dP_cross;  // per stage, dT_i/dP_{i-1} in K/W; entry 0 unused
  std::vector<double> residual_rms_K;
  std::vector<int> window_rows;
  std::vector<std::string> warnings;

  bool operator==(const ResponseCoefficients&) const = default;
};

struct FridgeModel {
  std::vector<Stage> stages;
  double room_temperature_K = 300.0;
  double still_flow_mol_per_s = 0.69e-3;
  double mxc_cooling_coefficient = 0;  // kappa in P = kappa * flow * T^2
  std::optional<ResponseCoefficients> response;

  std::size_t position_count() const { return stages.size() + 1; }
  double temperature_at(std::size_t position) const;
  std::string name_at(std::size_t position) const;
  double length_above(std::size_t position) const;
  // Accepts "RT" for position 0. Throws Error(lookup).
  std::size_t position_of(const std::string& name) const;
  std::size_t stage_index(const std::string& name) const;

  void validate() const;
  bool operator==(const FridgeModel&) const = default;

  /// The reference fridge: 50K, 4K, Still, CP and MXC with measured
  /// temperatures, cooling powers and cable lengths.
  static FridgeModel reference();
};

enum class LineKind { drive, flux, output_nbti, output_ss, pump, readin };
std::string to_string(LineKind kind);
LineKind line_kind_from_string(const std::string& text);

enum class ComponentKind { attenuator, ir_filter, lowpass, circulator, directional_coupler };
std::string to_string(ComponentKind kind);
ComponentKind component_kind_from_string(const std::string& text);

/// A discrete element sitting on a plate. Attenuation is either flat or a
/// (Hz, dB) curve interpolated linearly.
struct Component {
  ComponentKind kind = ComponentKind::attenuator;
  std::string stage;
  double attenuation_dB = 0;
  std::vector<std::pair<double, double>> attenuation_curve;
  std::optional<double> temperature_override_K;
  // Whether the component heat-sinks the center conductor.
  std::optional<bool> thermalizes_center;

  double attenuation_db_at(double frequency_Hz) const;
  bool sinks_center() const;
};

struct CableRun {
  std::string cable;
  std::string from;  // position name, "RT" allowed
  std::string to;
};

enum class CenterThermalization { always, uncertain, never };
std::string to_string(CenterThermalization value);
CenterThermalization center_thermalization_from_string(const std::string& text);

struct LineSpec {
  std::string name;
  LineKind kind = LineKind::drive;
  int count = 1;
  std::vector<CableRun> runs;
  std::vector<Component> components;
  std::map<std::string, CenterThermalization> center_thermalization;
  std::map<std::string, double> measured_passive_W;  // per line, by stage name

  std::size_t start_position(const FridgeModel& fridge) const;
  std::size_t end_position(const FridgeModel& fridge) const;
  // Throws Error(topology) for gaps, reversed runs or an unterminated line.
  void check_topology(const FridgeModel& fridge) const;
  // Components on the given stage, in declaration order.
  std::vector<const Component*> components_at(const std::string& stage) const;
  // Sum of component attenuation in dB per stage (indexed by stage).
  std::vector<double> discrete_attenuation_db(const FridgeModel& fridge, double frequency_Hz) const;
};

/// Attenuator-only drive line template with the given dB per stage.
LineSpec make_attenuated_line(const FridgeModel& fridge, const std::string& cable,
                              const std::vector<double>& stage_dB, LineKind kind = LineKind::drive);

/// Concentric shield pair exchanging thermal radiation.
struct ShieldGeometry {
  double radius_inner_m = 0;
  double radius_outer_m = 0;
  double height_m = 0;
  double emissivity = 1;
};

struct RadiationPair {
  std::string outer;  // position name
  std::string inner;
  ShieldGeometry geometry;
  // Already contained in the measured cooling power; reported but not summed.
  bool counted_in_cooling_spec = false;
};

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_MODEL_HPP
