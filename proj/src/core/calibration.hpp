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

#ifndef CRYOBUDGET_CORE_CALIBRATION_HPP
#define CRYOBUDGET_CORE_CALIBRATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/model.hpp"

namespace cryo {

struct MeasurementRow {
  double applied_power_W = 0;
  std::vector<double> temperatures_K;  // one per stage, fridge order
};

/// Temperatures of all plates while one plate is heated. Row 0 is the
/// zero-power baseline.
struct MeasurementSeries {
  std::string heated_stage;
  std::vector<MeasurementRow> rows;
};

struct ReferenceFitOptions {
  double window_fraction = 0.30;  // relative rise of the heated plate
};

/// Linear fits of plate temperature against applied power in the low-rise
/// window: self responses dP/dT and cross terms dT_i/dP_{i-1}.
ResponseCoefficients fit_reference(const std::vector<MeasurementSeries>& series,
                                   const FridgeModel& fridge,
                                   const ReferenceFitOptions& options = {});

/// Temperature rises produced by per-stage loads under the linear model.
std::vector<double> apply_loads(const ResponseCoefficients& coeffs, const std::vector<double>& loads_W);

struct ExtractedLoads {
  std::vector<double> loads_W;
  std::vector<std::string> warnings;
};

/// Inverts temperature rises into loads, top-down, subtracting the share of
/// each rise caused by the plate above.
ExtractedLoads extract_passive_load(const std::vector<double>& baseline_K,
                                    const std::vector<double>& loaded_K,
                                    const ResponseCoefficients& coeffs,
                                    bool cross_correction = true);

struct ResistanceFit {
  double r_eff_ohm = 0;
  double std_error_ohm = 0;
};

/// Least squares P = R I^2 through the origin.
ResistanceFit fit_effective_resistance(const std::vector<std::pair<double, double>>& current_load);

enum class Validity { valid, invalid, unknown };
std::string to_string(Validity v);

struct StillFlowCheck {
  Validity validity = Validity::unknown;
  std::string message;
};

/// CP and MXC extractions hold only at the reference Still temperature.
StillFlowCheck still_flow_normalize(std::optional<double> still_temperature_K,
                                    double target_K = 0.882, double tolerance_K = 1e-3);

/// Reads `# heated_stage=<name>` plus a header
/// `applied_power_W,T_<stage>...` in fridge order.
MeasurementSeries parse_measurement_csv(const std::string& text, const FridgeModel& fridge,
                                        const std::string& origin = "<csv>");

struct ResistanceTable {
  std::vector<std::string> columns;                          // e.g. "MXC" from load_MXC_W
  std::vector<std::vector<std::pair<double, double>>> data;  // per column (A, W)
};

/// Reads a `current_A,load_<name>_W...` table.
ResistanceTable parse_resistance_csv(const std::string& text, const std::string& origin = "<csv>");

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_CALIBRATION_HPP
