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

#include "core/config.hpp"

#include <filesystem>

#include "core/errors.hpp"
#include "core/json_reader.hpp"

namespace cryo {

using detail::Json;
using detail::ObjectReader;

std::map<std::string, std::vector<double>> builtin_configurations() {
  return {
      {"C1", {0, 10, 0, 20, 30}},
      {"C2", {0, 20, 0, 10, 30}},
      {"C3", {0, 20, 0, 20, 20}},
      {"C4", {0, 20, 10, 10, 20}},
  };
}

namespace {

// Runs `fn`, turning domain validation failures into config errors at `path`.
template <typename Fn>
void at_path(const std::string& path, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::invalid_argument:
      case ErrorCode::lookup:
      case ErrorCode::topology:
      case ErrorCode::range:
        throw Error(ErrorCode::config, path + ": " + e.what());
      default:
        throw;
    }
  }
}

std::map<std::string, std::string> string_map(ObjectReader& r, const std::string& key) {
  const Json& v = r.raw(key);
  if (!v.is_object()) r.fail(key, "expected object");
  std::map<std::string, std::string> out;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!it->is_string()) r.fail(key + "." + it.key(), "expected string");
    out[it.key()] = it->get<std::string>();
  }
  return out;
}

std::map<std::string, double> number_map(ObjectReader& r, const std::string& key) {
  const Json& v = r.raw(key);
  if (!v.is_object()) r.fail(key, "expected object");
  std::map<std::string, double> out;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!it->is_number()) r.fail(key + "." + it.key(), "expected number");
    out[it.key()] = it->get<double>();
  }
  return out;
}

FridgeModel parse_fridge(ObjectReader& root) {
  if (root.has("fridge") && root.raw("fridge").is_string()) {
    const std::string name = root.string("fridge");
    if (name != "reference") root.fail("fridge", "unknown fridge preset '" + name + "'");
    return FridgeModel::reference();
  }
  if (!root.has("fridge")) return FridgeModel::reference();
  ObjectReader r = root.object("fridge");
  FridgeModel f;
  f.room_temperature_K = r.number_or("room_temperature_K", 300.0);
  f.still_flow_mol_per_s = r.number_or("still_flow_mol_per_s", 0.69e-3);
  for (auto& s : r.object_list("stages")) {
    Stage st;
    st.name = s.string("name");
    st.temperature_K = s.number("temperature_K");
    st.cooling_power_W = s.number("cooling_power_W");
    st.cable_length_above_m = s.number("cable_length_above_m");
    s.finish();
    f.stages.push_back(st);
  }
  const auto kappa = r.opt_number("mxc_cooling_coefficient_W_s_per_mol_K2");
  if (r.has("mxc_cooling_reference")) {
    if (kappa) r.fail("mxc_cooling_reference", "give either a coefficient or a reference point");
    ObjectReader ref = r.object("mxc_cooling_reference");
    const double flow = ref.number("flow_mol_per_s");
    const double t = ref.number("temperature_K");
    const double p = ref.number("power_W");
    ref.finish();
    if (!(flow > 0.0 && t > 0.0 && p > 0.0)) {
      r.fail("mxc_cooling_reference", "flow, temperature and power must be > 0");
    }
    f.mxc_cooling_coefficient = p / (flow * t * t);
  } else {
    f.mxc_cooling_coefficient = kappa.value_or(FridgeModel::reference().mxc_cooling_coefficient);
  }
  if (r.has("response")) {
    ObjectReader rr = r.object("response");
    ResponseCoefficients rc;
    rc.dP_dT = rr.number_list("dP_dT_W_per_K");
    rc.dT_dP_cross = rr.number_list("dT_dP_cross_K_per_W");
    rr.finish();
    if (rc.dP_dT.size() != f.stages.size() || rc.dT_dP_cross.size() != f.stages.size()) {
      r.fail("response", "coefficient lists must have one entry per stage");
    }
    f.response = rc;
  }
  r.finish();
  at_path(root.child_path("fridge"), [&] { f.validate(); });
  return f;
}

LineSpec parse_line(ObjectReader& r) {
  LineSpec line;
  line.name = r.string("name");
  at_path(r.child_path("kind"), [&] { line.kind = line_kind_from_string(r.string("kind")); });
  line.count = r.integer_or("count", 1);
  if (line.count < 0) r.fail("count", "must be >= 0");
  for (auto& run : r.object_list("runs")) {
    CableRun cr;
    cr.cable = run.string("cable");
    cr.from = run.string("from");
    cr.to = run.string("to");
    run.finish();
    line.runs.push_back(cr);
  }
  if (r.has("components")) {
    for (auto& c : r.object_list("components")) {
      Component comp;
      at_path(c.child_path("kind"), [&] { comp.kind = component_kind_from_string(c.string("kind")); });
      comp.stage = c.string("stage");
      comp.attenuation_dB = c.number_or("attenuation_dB", 0.0);
      if (c.has("attenuation_curve_Hz_dB")) comp.attenuation_curve = c.pair_list("attenuation_curve_Hz_dB");
      comp.temperature_override_K = c.opt_number("temperature_override_K");
      if (c.has("thermalizes_center")) comp.thermalizes_center = c.boolean_or("thermalizes_center", false);
      c.boolean_or("thermalizes_center", false);
      c.finish();
      if (comp.attenuation_dB < 0.0) c.fail("attenuation_dB", "must be >= 0");
      for (std::size_t i = 1; i < comp.attenuation_curve.size(); ++i) {
        if (!(comp.attenuation_curve[i].first > comp.attenuation_curve[i - 1].first)) {
          c.fail("attenuation_curve_Hz_dB", "frequencies must be strictly increasing");
        }
      }
      line.components.push_back(comp);
    }
  }
  if (r.has("center_thermalization")) {
    for (const auto& [stage, mode] : string_map(r, "center_thermalization")) {
      at_path(r.child_path("center_thermalization." + stage),
              [&] { line.center_thermalization[stage] = center_thermalization_from_string(mode); });
    }
  }
  if (r.has("measured_passive_W")) line.measured_passive_W = number_map(r, "measured_passive_W");
  r.finish();
  return line;
}

FluxBiasSpec parse_flux(ObjectReader& r) {
  FluxBiasSpec f;
  f.r_eff_mxc_ohm = r.number_or("r_eff_mxc_ohm", f.r_eff_mxc_ohm);
  f.r_eff_cp_ohm = r.number_or("r_eff_cp_ohm", f.r_eff_cp_ohm);
  f.i_max_A = r.number_or("i_max_A", f.i_max_A);
  f.pulse_amplitude_A = r.number_or("pulse_amplitude_A", f.pulse_amplitude_A);
  f.pulse_duty = r.number_or("pulse_duty", f.pulse_duty);
  r.finish();
  at_path(r.path(), [&] { f.validate(); });
  return f;
}

SignalPlan parse_plan(ObjectReader& r) {
  SignalPlan p;
  p.drive_target_dBm = r.number_or("drive_target_dBm", p.drive_target_dBm);
  p.drive_frequency_Hz = r.number_or("drive_frequency_Hz", p.drive_frequency_Hz);
  p.readin_target_dBm = r.opt_number("readin_target_dBm");
  p.pump_target_dBm = r.number_or("pump_target_dBm", p.pump_target_dBm);
  p.pump_frequency_Hz = r.number_or("pump_frequency_Hz", p.pump_frequency_Hz);
  p.with_cable_loss = r.boolean_or("with_cable_loss", p.with_cable_loss);
  if (r.has("flux")) {
    ObjectReader f = r.object("flux");
    p.flux = parse_flux(f);
  }
  p.flux_dc = r.boolean_or("flux_dc", p.flux_dc);
  p.flux_pulses = r.boolean_or("flux_pulses", p.flux_pulses);
  p.flux_cp_stage = r.string_or("flux_cp_stage", p.flux_cp_stage);
  p.flux_mxc_stage = r.string_or("flux_mxc_stage", p.flux_mxc_stage);
  p.still_absorption = r.boolean_or("still_absorption", p.still_absorption);
  p.still_absorption_fraction = r.number_or("still_absorption_fraction", p.still_absorption_fraction);
  p.still_stage = r.string_or("still_stage", p.still_stage);
  p.still_source_stage = r.string_or("still_source_stage", p.still_source_stage);
  const std::string source = r.string_or("passive_source", "predicted");
  if (source == "predicted") {
    p.passive_source = PassiveSource::predicted;
  } else if (source == "measured") {
    p.passive_source = PassiveSource::measured;
  } else {
    r.fail("passive_source", "expected 'predicted' or 'measured'");
  }
  p.noise_frequency_Hz = r.number_or("noise_frequency_Hz", p.noise_frequency_Hz);
  p.noise_with_cable_loss = r.boolean_or("noise_with_cable_loss", p.noise_with_cable_loss);
  r.finish();
  for (double f : {p.drive_frequency_Hz, p.pump_frequency_Hz, p.noise_frequency_Hz}) {
    if (!(f > 0.0)) r.fail("frequency", "frequencies must be > 0");
  }
  if (!(p.still_absorption_fraction >= 0.0 && p.still_absorption_fraction <= 1.0)) {
    r.fail("still_absorption_fraction", "must lie in [0, 1]");
  }
  return p;
}

}  // namespace

ProjectConfig parse_project_config(const std::string& text, const std::string& origin,
                                   const std::string& base_dir) {
  const Json doc = detail::parse_json_text(text, origin);
  ObjectReader root(doc, origin);
  ProjectConfig cfg = default_project_config();
  cfg.origin = origin;
  const int version = root.integer("schema_version");
  if (version != 1) root.fail("schema_version", "unsupported version " + std::to_string(version));
  cfg.description = root.string_or("description", "");

  if (auto cat = root.opt_string("catalog")) {
    std::filesystem::path p(*cat);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    cfg.catalog_path = p.lexically_normal().string();
  }
  if (root.has("cable_overrides")) {
    for (auto& o : root.object_list("cable_overrides")) {
      CableOverride co;
      co.name = o.string("name");
      co.center_diameter_m = o.opt_number("center_conductor_diameter_m");
      co.dielectric_diameter_m = o.opt_number("dielectric_diameter_m");
      co.shield_diameter_m = o.opt_number("shield_diameter_m");
      co.dc_resistance_ohm_per_m = o.opt_number("dc_resistance_ohm_per_m");
      co.cryo_attenuation_scale = o.opt_number("cryo_attenuation_scale");
      o.finish();
      cfg.cable_overrides.push_back(co);
    }
  }

  cfg.fridge = parse_fridge(root);

  if (root.has("inventory")) {
    for (auto& l : root.object_list("inventory")) {
      LineSpec line = parse_line(l);
      at_path(l.path(), [&] { line.check_topology(cfg.fridge); });
      for (const auto& [stage, watts] : line.measured_passive_W) {
        at_path(l.child_path("measured_passive_W." + stage), [&] { cfg.fridge.stage_index(stage); });
        if (watts < 0.0) l.fail("measured_passive_W." + stage, "must be >= 0");
      }
      cfg.inventory.push_back(std::move(line));
    }
  }

  if (root.has("signal_plan")) {
    ObjectReader p = root.object("signal_plan");
    cfg.plan = parse_plan(p);
  }

  if (root.has("radiation")) {
    for (auto& r : root.object_list("radiation")) {
      RadiationPair rp;
      rp.outer = r.string("outer");
      rp.inner = r.string("inner");
      rp.geometry.radius_inner_m = r.number("radius_inner_m");
      rp.geometry.radius_outer_m = r.number("radius_outer_m");
      rp.geometry.height_m = r.number("height_m");
      rp.geometry.emissivity = r.number("emissivity");
      rp.counted_in_cooling_spec = r.boolean_or("counted_in_cooling_spec", false);
      r.finish();
      at_path(r.path(), [&] {
        cfg.fridge.position_of(rp.outer);
        cfg.fridge.position_of(rp.inner);
      });
      cfg.radiation.push_back(rp);
    }
  }

  cfg.qubits = root.integer_or("qubits", cfg.qubits);
  if (cfg.qubits < 0) root.fail("qubits", "must be >= 0");

  if (root.has("scenario")) {
    ObjectReader s = root.object("scenario");
    ScaleOptions so;
    so.diameter_scale = s.number_or("diameter_scale", 1.0);
    so.flux_current_zeroed = s.boolean_or("flux_current_zeroed", false);
    so.cp_temperature_K = s.opt_number("cp_temperature_K");
    so.cp_cooling_W = s.opt_number("cp_cooling_W");
    so.mxc_temperature_K = s.opt_number("mxc_temperature_K");
    so.mxc_cooling_W = s.opt_number("mxc_cooling_W");
    s.finish();
    if (!(so.diameter_scale > 0.0)) s.fail("diameter_scale", "must be > 0");
    cfg.scenario = so;
  }

  if (root.has("noise")) {
    ObjectReader n = root.object("noise");
    if (n.has("configurations")) {
      const Json& v = n.raw("configurations");
      if (!v.is_object()) n.fail("configurations", "expected object");
      ObjectReader cr(v, n.child_path("configurations"));
      for (auto it = v.begin(); it != v.end(); ++it) {
        auto values = cr.number_list(it.key());
        if (values.size() != cfg.fridge.stages.size()) {
          cr.fail(it.key(), "expected one value per stage");
        }
        cfg.noise.configurations[it.key()] = values;
      }
    }
    cfg.noise.cable = n.string_or("cable", cfg.noise.cable);
    cfg.noise.line_count = n.integer_or("line_count", cfg.noise.line_count);
    cfg.noise.drive_target_dBm = n.number_or("drive_target_dBm", cfg.noise.drive_target_dBm);
    n.finish();
  }

  if (root.has("optimize")) {
    ObjectReader o = root.object("optimize");
    auto& sc = cfg.optimize;
    sc.total_dB = o.number_or("total_dB", sc.total_dB);
    if (o.has("allowed_dB")) sc.allowed_dB = o.number_list("allowed_dB");
    if (o.has("max_fraction")) sc.max_fraction = number_map(o, "max_fraction");
    if (auto obj = o.opt_string("objective")) {
      at_path(o.child_path("objective"), [&] { sc.objective = objective_from_string(*obj); });
    }
    sc.count_penalty = o.boolean_or("count_penalty", sc.count_penalty);
    sc.include_infeasible = o.boolean_or("include_infeasible", sc.include_infeasible);
    o.finish();
    for (const auto& [stage, limit] : sc.max_fraction) {
      at_path(o.child_path("max_fraction." + stage), [&] { cfg.fridge.stage_index(stage); });
    }
  }
  root.finish();
  return cfg;
}

ProjectConfig load_project_config(const std::string& path) {
  const std::string text = detail::read_text_file(path);
  const auto dir = std::filesystem::path(path).parent_path().string();
  return parse_project_config(text, path, dir.empty() ? "." : dir);
}

ProjectConfig default_project_config() {
  ProjectConfig cfg;
  cfg.origin = "<default>";
  cfg.catalog_path = (std::filesystem::path(default_data_dir()) / "catalog.json").string();
  cfg.fridge = FridgeModel::reference();
  cfg.noise.configurations = builtin_configurations();
  return cfg;
}

Catalog load_project_catalog(const ProjectConfig& config) {
  Catalog cat = Catalog::load_file(config.catalog_path);
  for (const auto& o : config.cable_overrides) {
    at_path(config.origin + ".cable_overrides[" + o.name + "]", [&] {
      CableSpec c = cat.cable(o.name);
      if (o.center_diameter_m) c.geometry.center_diameter_m = *o.center_diameter_m;
      if (o.dielectric_diameter_m) c.geometry.dielectric_diameter_m = *o.dielectric_diameter_m;
      if (o.shield_diameter_m) c.geometry.shield_diameter_m = *o.shield_diameter_m;
      if (o.dc_resistance_ohm_per_m) c.dc_resistance_ohm_per_m = *o.dc_resistance_ohm_per_m;
      if (o.cryo_attenuation_scale) c.cryo_attenuation_scale = *o.cryo_attenuation_scale;
      cat.add_cable(std::move(c));
    });
  }
  for (const auto& line : config.inventory) {
    for (const auto& run : line.runs) {
      at_path(config.origin + ": line '" + line.name + "'", [&] { cat.cable(run.cable); });
    }
  }
  at_path(config.origin + ".noise.cable", [&] { cat.cable(config.noise.cable); });
  return cat;
}

BudgetInput budget_input(const ProjectConfig& config) {
  BudgetInput in;
  in.fridge = config.fridge;
  in.inventory = config.inventory;
  in.plan = config.plan;
  in.radiation = config.radiation;
  in.qubits = config.qubits;
  return in;
}

}  // namespace cryo
