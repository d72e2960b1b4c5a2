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

#ifndef CRYOBUDGET_CORE_ATTENOPT_HPP
#define CRYOBUDGET_CORE_ATTENOPT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/materials.hpp"
#include "core/model.hpp"

namespace cryo {

struct AttenContext {
  FridgeModel fridge;
  const Catalog* catalog = nullptr;
  LineSpec line_template;  // attenuators are replaced per candidate
  int line_count = 25;
  double drive_target_dBm = -78.0;
  double frequency_Hz = 6e9;
  bool noise_with_cable_loss = false;
  bool load_with_cable_loss = true;
};

/// Default context: a UT085-SS-SS drive line from RT to the last stage.
AttenContext default_atten_context(const FridgeModel& fridge, const Catalog& catalog);

struct ConfigCandidate {
  std::vector<double> stage_dB;
  double n_mxc = 0;
  std::vector<double> fractions;  // active load / cooling power per stage
  int attenuator_count = 0;
  bool feasible = true;

  double max_fraction() const;
};

ConfigCandidate evaluate_config(const std::vector<double>& stage_dB, const AttenContext& ctx);

enum class Objective { min_n_mxc, min_max_fraction, pareto };
std::string to_string(Objective o);
Objective objective_from_string(const std::string& text);

struct SearchConstraints {
  double total_dB = 60;
  std::vector<double> allowed_dB{0, 3, 6, 10, 20, 30};
  std::map<std::string, double> max_fraction;  // by stage name
  Objective objective = Objective::min_n_mxc;
  bool count_penalty = false;      // fewer attenuators rank first
  bool include_infeasible = false;  // keep rejected candidates, flagged
};

/// Every assignment of allowed values to the stages that sums to the total,
/// evaluated, filtered and ranked. Ties break on the config vector.
std::vector<ConfigCandidate> enumerate(const SearchConstraints& constraints, const AttenContext& ctx);

/// n_MXC as one stage's attenuation varies with the others held fixed.
std::vector<std::pair<double, double>> sweep_single_stage(const std::string& stage,
                                                          const std::vector<double>& values_dB,
                                                          const std::vector<double>& fixed_dB,
                                                          const AttenContext& ctx);

/// Continuous relaxation: starting from `start`, moves attenuation between
/// stages on a shrinking grid while the constraints hold and n_MXC drops.
ConfigCandidate refine_continuous(const ConfigCandidate& start, const SearchConstraints& constraints,
                                  const AttenContext& ctx, double finest_step_dB = 0.05);

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_ATTENOPT_HPP
