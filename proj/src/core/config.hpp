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

#ifndef CRYOBUDGET_CORE_CONFIG_HPP
#define CRYOBUDGET_CORE_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/attenopt.hpp"
#include "core/budget.hpp"
#include "core/materials.hpp"
#include "core/model.hpp"

namespace cryo {

/// Partial cable override applied on top of the catalog entry.
struct CableOverride {
  std::string name;
  std::optional<double> center_diameter_m;
  std::optional<double> dielectric_diameter_m;
  std::optional<double> shield_diameter_m;
  std::optional<double> dc_resistance_ohm_per_m;
  std::optional<double> cryo_attenuation_scale;
};

struct NoiseSettings {
  std::map<std::string, std::vector<double>> configurations;  // name -> dB per stage
  std::string cable = "UT085-SS-SS";
  int line_count = 25;
  double drive_target_dBm = -78.0;
};

struct ProjectConfig {
  std::string origin;
  std::string description;
  std::string catalog_path;  // resolved
  std::vector<CableOverride> cable_overrides;
  FridgeModel fridge;
  std::vector<LineSpec> inventory;
  SignalPlan plan;
  std::vector<RadiationPair> radiation;
  int qubits = 50;
  std::optional<ScaleOptions> scenario;
  NoiseSettings noise;
  SearchConstraints optimize;
};

/// Configurations C1-C4 (dB on 50K, 4K, Still, CP, MXC).
std::map<std::string, std::vector<double>> builtin_configurations();

/// Strict parse: unknown keys and wrong types raise Error(config) naming the
/// JSON path; syntax errors raise Error(parse) with line and column.
/// Relative catalog paths resolve against `base_dir`.
ProjectConfig parse_project_config(const std::string& text, const std::string& origin,
                                   const std::string& base_dir);
ProjectConfig load_project_config(const std::string& path);

/// Project with the reference fridge, the default catalog and no lines.
ProjectConfig default_project_config();

/// Loads the catalog named by the config and applies its overrides.
Catalog load_project_catalog(const ProjectConfig& config);

BudgetInput budget_input(const ProjectConfig& config);

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_CONFIG_HPP
