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

#ifndef CRYOBUDGET_CORE_BUDGET_HPP
#define CRYOBUDGET_CORE_BUDGET_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/heatflow.hpp"
#include "core/materials.hpp"
#include "core/model.hpp"
#include "core/signals.hpp"

namespace cryo {

struct ActiveLoads {
  std::vector<double> stage_W;  // indexed by stage
  double rt_W = 0;              // upper half of the first cable run
  double input_W = 0;
  double delivered_W = 0;
};

/// Total attenuation of a line in dB: components plus, optionally, cables.
double line_attenuation_db(const LineSpec& line, const FridgeModel& fridge, const Catalog& catalog,
                           double frequency_Hz, bool with_cable_loss);

/// Follows the signal down the line. Each component dissipates on its plate;
/// each cable run between adjacent plates splits its loss evenly between
/// them.
ActiveLoads active_loads_per_stage(const LineSpec& line, double input_W, double frequency_Hz,
                                   const FridgeModel& fridge, const Catalog& catalog,
                                   bool with_cable_loss = true);

/// kappa * flow * T^2, with the fridge's flow unless one is given.
double cooling_power_mxc(const FridgeModel& fridge, double temperature_K,
                         std::optional<double> flow_mol_per_s = std::nullopt);

enum class PassiveSource { predicted, measured };

struct SignalPlan {
  double drive_target_dBm = -78.0;  // average power per line at the end
  double drive_frequency_Hz = 6e9;
  std::optional<double> readin_target_dBm;  // readout tones are left out by default
  double pump_target_dBm = -65.0;
  double pump_frequency_Hz = 6e9;
  bool with_cable_loss = true;
  FluxBiasSpec flux = FluxBiasSpec::measured();
  bool flux_dc = true;
  bool flux_pulses = true;
  std::string flux_cp_stage = "CP";
  std::string flux_mxc_stage = "MXC";
  // Empirical: share of the 4K active dissipation that shows up on the Still.
  bool still_absorption = true;
  double still_absorption_fraction = 0.004;
  std::string still_stage = "Still";
  std::string still_source_stage = "4K";
  PassiveSource passive_source = PassiveSource::predicted;
  double noise_frequency_Hz = 6e9;
  bool noise_with_cable_loss = false;
};

struct BudgetInput {
  FridgeModel fridge;
  std::vector<LineSpec> inventory;
  SignalPlan plan;
  std::vector<RadiationPair> radiation;
  int qubits = 50;
};

struct StageBudget {
  std::string stage;
  Bounds passive_bounds_W;  // predicted
  double passive_W = 0;     // headline
  double active_W = 0;
  double radiative_W = 0;
  double radiative_reported_W = 0;  // already inside the cooling spec
  double total_W = 0;
  double cooling_W = 0;
  double fraction = 0;
  std::map<std::string, double> passive_by_kind;
  std::map<std::string, double> active_by_source;
};

struct BudgetReport {
  std::vector<StageBudget> stages;
  std::optional<double> n_mxc;
  std::optional<std::vector<double>> predicted_temperatures_K;
  double rt_dissipation_W = 0;
  std::vector<std::string> notes;

  const StageBudget& stage(const std::string& name) const;
};

BudgetReport total_budget(const BudgetInput& input, const Catalog& catalog);

/// Linearized plate temperatures under the report's loads, top-down.
/// Empty without response coefficients.
std::optional<std::vector<double>> predict_temperatures(const FridgeModel& fridge,
                                                        const BudgetReport& report);

struct ScaleOptions {
  double diameter_scale = 1.0;
  bool flux_current_zeroed = false;
  std::optional<double> cp_temperature_K;
  std::optional<double> cp_cooling_W;
  std::optional<double> mxc_temperature_K;
  std::optional<double> mxc_cooling_W;
  std::string cp_stage = "CP";
  std::string mxc_stage = "MXC";
};

struct ScenarioResult {
  BudgetReport report;
  int max_qubits = 0;
  BudgetInput input;  // after scaling
  Catalog catalog;
};

/// Rebudgets with every cable diameter scaled: cross sections by s^2,
/// attenuation per metre by 1/s, DC and effective resistances by 1/s^2,
/// measured passive loads by s^2.
ScenarioResult scale_scenario(const BudgetInput& base, const Catalog& catalog,
                              const ScaleOptions& options);

/// floor(qubits * min over stages of cooling / total); INT_MAX when nothing is loaded.
int max_qubit_estimate(const BudgetReport& report, int qubits);

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_BUDGET_HPP
