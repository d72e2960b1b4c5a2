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

#include "core/budget.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"
#include "core/noise.hpp"
#include "core/units.hpp"

namespace cryo {

namespace {

bool cold_segment(const FridgeModel& fridge, std::size_t p) {
  return fridge.temperature_at(p - 1) <= 4.0 && fridge.temperature_at(p) <= 4.0;
}

std::size_t stage_or_config_error(const FridgeModel& fridge, const std::string& name,
                                  const std::string& what) {
  try {
    return fridge.stage_index(name);
  } catch (const Error&) {
    throw Error(ErrorCode::config, what + " refers to unknown stage '" + name + "'");
  }
}

}  // namespace

double line_attenuation_db(const LineSpec& line, const FridgeModel& fridge, const Catalog& catalog,
                           double frequency_Hz, bool with_cable_loss) {
  line.check_topology(fridge);
  double total = 0.0;
  for (const auto& run : line.runs) {
    const CableSpec& cable = catalog.cable(run.cable);
    for (std::size_t p = fridge.position_of(run.from) + 1; p <= fridge.position_of(run.to); ++p) {
      if (with_cable_loss) {
        total += cable_attenuation_db(cable, frequency_Hz, fridge.length_above(p), cold_segment(fridge, p));
      }
      for (const Component* c : line.components_at(fridge.name_at(p))) {
        total += c->attenuation_db_at(frequency_Hz);
      }
    }
  }
  return total;
}

ActiveLoads active_loads_per_stage(const LineSpec& line, double input_W, double frequency_Hz,
                                   const FridgeModel& fridge, const Catalog& catalog,
                                   bool with_cable_loss) {
  if (!(input_W >= 0.0)) throw Error(ErrorCode::invalid_argument, "input power must be >= 0");
  line.check_topology(fridge);
  ActiveLoads out;
  out.stage_W.assign(fridge.stages.size(), 0.0);
  out.input_W = input_W;
  auto deposit = [&](std::size_t position, double watts) {
    if (position == 0) {
      out.rt_W += watts;
    } else {
      out.stage_W[position - 1] += watts;
    }
  };
  double power = input_W;
  for (const auto& run : line.runs) {
    const CableSpec& cable = catalog.cable(run.cable);
    for (std::size_t p = fridge.position_of(run.from) + 1; p <= fridge.position_of(run.to); ++p) {
      if (with_cable_loss) {
        const double db =
            cable_attenuation_db(cable, frequency_Hz, fridge.length_above(p), cold_segment(fridge, p));
        const double lost = power * -std::expm1(-db * std::log(10.0) / 10.0);
        deposit(p - 1, 0.5 * lost);
        deposit(p, 0.5 * lost);
        power -= lost;
      }
      for (const Component* c : line.components_at(fridge.name_at(p))) {
        const double db = c->attenuation_db_at(frequency_Hz);
        const double lost = power * -std::expm1(-db * std::log(10.0) / 10.0);
        deposit(p, lost);
        power -= lost;
      }
    }
  }
  out.delivered_W = power;
  return out;
}

double cooling_power_mxc(const FridgeModel& fridge, double temperature_K,
                         std::optional<double> flow_mol_per_s) {
  if (!(temperature_K > 0.0)) throw Error(ErrorCode::invalid_argument, "temperature must be > 0");
  const double flow = flow_mol_per_s.value_or(fridge.still_flow_mol_per_s);
  if (!(flow > 0.0)) throw Error(ErrorCode::invalid_argument, "flow must be > 0");
  return fridge.mxc_cooling_coefficient * flow * temperature_K * temperature_K;
}

const StageBudget& BudgetReport::stage(const std::string& name) const {
  for (const auto& s : stages) {
    if (s.stage == name) return s;
  }
  throw Error(ErrorCode::lookup, "no stage '" + name + "' in report");
}

BudgetReport total_budget(const BudgetInput& input, const Catalog& catalog) {
  const FridgeModel& fridge = input.fridge;
  fridge.validate();
  const SignalPlan& plan = input.plan;
  const std::size_t n = fridge.stages.size();

  BudgetReport report;
  report.stages.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    report.stages[i].stage = fridge.stages[i].name;
    report.stages[i].cooling_W = fridge.stages[i].cooling_power_W;
  }
  auto add_active = [&](std::size_t i, const std::string& source, double watts) {
    report.stages[i].active_W += watts;
    report.stages[i].active_by_source[source] += watts;
  };

  bool have_drive_noise = false;
  for (const auto& line : input.inventory) {
    try {
      line.check_topology(fridge);
    } catch (const Error& e) {
      throw Error(ErrorCode::config, e.what());
    }
    const double count = line.count;
    const std::string kind = to_string(line.kind);

    const auto bounds = line_passive_profile(line, fridge, catalog);
    for (const auto& [stage, watts] : line.measured_passive_W) {
      stage_or_config_error(fridge, stage, "measured passive load of line '" + line.name + "'");
      (void)watts;
    }
    for (std::size_t i = 0; i < n; ++i) {
      double headline = bounds[i].mid();
      if (plan.passive_source == PassiveSource::measured) {
        if (auto it = line.measured_passive_W.find(fridge.stages[i].name);
            it != line.measured_passive_W.end()) {
          headline = it->second;
        }
      }
      auto& s = report.stages[i];
      s.passive_bounds_W.low += count * bounds[i].low;
      s.passive_bounds_W.high += count * bounds[i].high;
      s.passive_W += count * headline;
      s.passive_by_kind[kind] += count * headline;
    }

    std::optional<double> target_dBm;
    double frequency = plan.drive_frequency_Hz;
    switch (line.kind) {
      case LineKind::drive:
        target_dBm = plan.drive_target_dBm;
        break;
      case LineKind::readin:
        target_dBm = plan.readin_target_dBm;
        break;
      case LineKind::pump:
        target_dBm = plan.pump_target_dBm;
        frequency = plan.pump_frequency_Hz;
        break;
      default:
        break;
    }
    if (target_dBm) {
      const double att = line_attenuation_db(line, fridge, catalog, frequency, plan.with_cable_loss);
      const double input_W = dbm_to_watts(*target_dBm + att);
      const auto loads =
          active_loads_per_stage(line, input_W, frequency, fridge, catalog, plan.with_cable_loss);
      for (std::size_t i = 0; i < n; ++i) {
        if (loads.stage_W[i] != 0.0) add_active(i, kind, count * loads.stage_W[i]);
      }
      report.rt_dissipation_W += count * loads.rt_W;
    }

    if (line.kind == LineKind::flux) {
      const std::size_t cp = stage_or_config_error(fridge, plan.flux_cp_stage, "flux plan");
      const std::size_t mxc = stage_or_config_error(fridge, plan.flux_mxc_stage, "flux plan");
      if (plan.flux_dc) {
        const auto dc = flux_bias_average_load(plan.flux);
        add_active(cp, "flux_dc", count * dc.cp_W);
        add_active(mxc, "flux_dc", count * dc.mxc_W);
      }
      if (plan.flux_pulses) {
        const auto pulse = flux_pulse_load(plan.flux);
        add_active(cp, "flux_pulse", count * pulse.cp_W);
        add_active(mxc, "flux_pulse", count * pulse.mxc_W);
      }
    }

    if (line.kind == LineKind::drive && !have_drive_noise && line.count > 0) {
      const auto chain =
          line_noise_chain(line, fridge, catalog, plan.noise_frequency_Hz, plan.noise_with_cable_loss);
      report.n_mxc = cascade_photon_number(chain, plan.noise_frequency_Hz).output();
      have_drive_noise = true;
    }
  }

  if (plan.still_absorption && !input.inventory.empty()) {
    const std::size_t still = stage_or_config_error(fridge, plan.still_stage, "still absorption");
    const std::size_t src = stage_or_config_error(fridge, plan.still_source_stage, "still absorption");
    const double moved = plan.still_absorption_fraction * report.stages[src].active_W;
    if (moved != 0.0) {
      add_active(src, "still_absorption_empirical", -moved);
      add_active(still, "still_absorption_empirical", moved);
    }
  }

  for (const auto& pair : input.radiation) {
    std::size_t outer = 0;
    std::size_t inner = 0;
    try {
      outer = fridge.position_of(pair.outer);
      inner = fridge.position_of(pair.inner);
    } catch (const Error& e) {
      throw Error(ErrorCode::config, std::string("radiation pair: ") + e.what());
    }
    if (inner == 0 || inner <= outer) {
      throw Error(ErrorCode::config, "radiation pair must go from a warmer to a colder stage");
    }
    const double watts = radiative_load(pair.geometry, fridge.temperature_at(outer),
                                        fridge.temperature_at(inner));
    auto& s = report.stages[inner - 1];
    if (pair.counted_in_cooling_spec) {
      s.radiative_reported_W += watts;
    } else {
      s.radiative_W += watts;
    }
  }

  for (auto& s : report.stages) {
    s.total_W = s.passive_W + s.active_W + s.radiative_W;
    s.fraction = s.total_W / s.cooling_W;
  }
  report.predicted_temperatures_K = predict_temperatures(fridge, report);
  if (plan.still_absorption) {
    report.notes.push_back("still_absorption_empirical: " +
                           std::to_string(plan.still_absorption_fraction * 100.0) +
                           "% of the 4K active load moved to the Still");
  }
  return report;
}

std::optional<std::vector<double>> predict_temperatures(const FridgeModel& fridge,
                                                        const BudgetReport& report) {
  if (!fridge.response) return std::nullopt;
  const auto& r = *fridge.response;
  const std::size_t n = fridge.stages.size();
  if (r.dP_dT.size() != n || r.dT_dP_cross.size() != n || report.stages.size() != n) {
    return std::nullopt;
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double dp = report.stages[i].total_W;
    if (!(r.dP_dT[i] > 0.0)) return std::nullopt;
    double t = fridge.stages[i].temperature_K + dp / r.dP_dT[i];
    if (i > 0) t += r.dT_dP_cross[i] * report.stages[i - 1].total_W;
    out[i] = t;
  }
  return out;
}

int max_qubit_estimate(const BudgetReport& report, int qubits) {
  double worst = 0.0;
  for (const auto& s : report.stages) worst = std::max(worst, s.fraction);
  const double estimate = std::floor(qubits / worst);
  if (!(worst > 0.0) || estimate >= std::numeric_limits<int>::max()) {
    return std::numeric_limits<int>::max();
  }
  return static_cast<int>(estimate);
}

ScenarioResult scale_scenario(const BudgetInput& base, const Catalog& catalog,
                              const ScaleOptions& options) {
  const double s = options.diameter_scale;
  if (!(s > 0.0)) throw Error(ErrorCode::invalid_argument, "diameter scale must be > 0");
  ScenarioResult out{BudgetReport{}, 0, base, catalog};
  BudgetInput& in = out.input;

  for (const auto& name : catalog.cable_names()) out.catalog.add_cable(catalog.cable(name).scaled(s));
  for (auto& line : in.inventory) {
    for (auto& [stage, watts] : line.measured_passive_W) watts *= s * s;
  }
  in.plan.flux.r_eff_cp_ohm /= s * s;
  in.plan.flux.r_eff_mxc_ohm /= s * s;
  if (options.flux_current_zeroed) in.plan.flux.i_max_A = 0.0;

  auto override_stage = [&](const std::string& name, std::optional<double> t,
                            std::optional<double> cooling) {
    if (!t && !cooling) return;
    const std::size_t i = stage_or_config_error(in.fridge, name, "scenario override");
    if (t) in.fridge.stages[i].temperature_K = *t;
    if (cooling) in.fridge.stages[i].cooling_power_W = *cooling;
  };
  override_stage(options.cp_stage, options.cp_temperature_K, options.cp_cooling_W);
  override_stage(options.mxc_stage, options.mxc_temperature_K, options.mxc_cooling_W);

  out.report = total_budget(in, out.catalog);
  out.max_qubits = max_qubit_estimate(out.report, in.qubits);
  return out;
}

}  // namespace cryo
