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

#ifndef CRYOBUDGET_CORE_COMMANDS_HPP
#define CRYOBUDGET_CORE_COMMANDS_HPP

// Command layer shared by the C API and the CLI. Each command returns named
// text artifacts (CSV or JSON) plus a JSON summary.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/config.hpp"
#include "core/materials.hpp"

namespace cryo {

struct Project {
  ProjectConfig config;
  Catalog catalog;
};

Project open_project(const std::string& path);
/// Preset from <data dir>/presets/<name>.json.
Project open_preset(const std::string& name);
Project open_default_project();
std::vector<std::string> preset_names();

struct CommandResult {
  std::vector<std::pair<std::string, std::string>> artifacts;  // name, contents
  std::string summary;                                         // JSON
  std::vector<std::string> notices;
};

struct PassiveOptions {
  bool bounds = true;
};

struct NoiseOptions {
  std::string configuration = "C3";     // or "custom"
  std::vector<double> custom_dB;        // with "custom"
  double frequency_Hz = 6e9;
  bool with_cable_loss = false;
  std::optional<double> n_input;
};

struct OptimizeOptions {
  std::optional<double> total_dB;
  std::optional<std::vector<double>> allowed_dB;
  std::map<std::string, double> max_fraction;  // merged over the config
  std::optional<std::string> objective;
  std::optional<bool> count_penalty;
  std::optional<bool> include_infeasible;
  bool continuous = false;
};

struct SweepOptions {
  std::string stage = "4K";
  double from_dB = 0;
  double to_dB = 40;
  double step_dB = 1;
  std::vector<double> fixed_dB{0, 20, 0, 20, 20};
  double frequency_Hz = 6e9;
  bool with_cable_loss = false;
};

struct FitInput {
  std::string origin;
  std::string text;
};

struct FitOptions {
  std::string kind = "reference";  // or "resistance"
  double window_fraction = 0.30;
  std::optional<double> still_temperature_K;
};

CommandResult run_passive(const Project& project, const PassiveOptions& options);
CommandResult run_noise(const Project& project, const NoiseOptions& options);
CommandResult run_budget(const Project& project);
CommandResult run_optimize(const Project& project, const OptimizeOptions& options);
CommandResult run_sweep(const Project& project, const SweepOptions& options);
CommandResult run_fit(const Project& project, const std::vector<FitInput>& inputs,
                      const FitOptions& options);

/// Strict JSON option parsers used by the C API ("" or "{}" for defaults).
PassiveOptions parse_passive_options(const std::string& json);
NoiseOptions parse_noise_options(const std::string& json);
OptimizeOptions parse_optimize_options(const std::string& json);
SweepOptions parse_sweep_options(const std::string& json);
FitOptions parse_fit_options(const std::string& json);

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_COMMANDS_HPP
