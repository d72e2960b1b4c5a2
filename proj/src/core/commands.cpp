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

#include "core/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>

#include "core/attenopt.hpp"
#include "core/budget.hpp"
#include "core/calibration.hpp"
#include "core/errors.hpp"
#include "core/heatflow.hpp"
#include "core/json_reader.hpp"
#include "core/noise.hpp"
#include "core/report.hpp"
#include "core/signals.hpp"
#include "core/units.hpp"

namespace cryo {

using OJson = nlohmann::ordered_json;
using detail::ObjectReader;

namespace {

std::string dump(const OJson& j) { return j.dump(2) + "\n"; }

OJson number_or_null(std::optional<double> v) { return v ? OJson(*v) : OJson(nullptr); }

OJson stage_map(const FridgeModel& fridge, const std::vector<double>& values) {
  OJson j = OJson::object();
  for (std::size_t i = 0; i < values.size(); ++i) j[fridge.stages[i].name] = values[i];
  return j;
}

std::vector<double> frange(double from, double to, double step) {
  if (!(step > 0.0)) throw Error(ErrorCode::invalid_argument, "step must be > 0");
  std::vector<double> out;
  if (to < from) return out;
  const long n = static_cast<long>(std::floor((to - from) / step + 1e-9));
  for (long k = 0; k <= n; ++k) out.push_back(from + static_cast<double>(k) * step);
  return out;
}

AttenContext noise_context(const Project& p, double frequency_Hz, bool noise_cable_loss) {
  AttenContext ctx = default_atten_context(p.config.fridge, p.catalog);
  ctx.line_template = make_attenuated_line(p.config.fridge, p.config.noise.cable,
                                           std::vector<double>(p.config.fridge.stages.size(), 0.0));
  ctx.line_count = p.config.noise.line_count;
  ctx.drive_target_dBm = p.config.noise.drive_target_dBm;
  ctx.frequency_Hz = frequency_Hz;
  ctx.noise_with_cable_loss = noise_cable_loss;
  return ctx;
}

std::vector<std::string> db_header(const FridgeModel& fridge) {
  std::vector<std::string> h;
  for (const auto& s : fridge.stages) h.push_back("dB_" + s.name);
  return h;
}

}  // namespace

Project open_project(const std::string& path) {
  Project p{load_project_config(path), Catalog{}};
  p.catalog = load_project_catalog(p.config);
  return p;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  const auto dir = std::filesystem::path(default_data_dir()) / "presets";
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec)) {
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Project open_preset(const std::string& name) {
  const auto path = std::filesystem::path(default_data_dir()) / "presets" / (name + ".json");
  if (name.empty() || name.find('/') != std::string::npos || !std::filesystem::exists(path)) {
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw Error(ErrorCode::lookup, "unknown preset '" + name + "' (available: " + known + ")");
  }
  return open_project(path.string());
}

Project open_default_project() {
  Project p{default_project_config(), Catalog{}};
  p.catalog = load_project_catalog(p.config);
  return p;
}

CommandResult run_passive(const Project& project, const PassiveOptions& options) {
  const auto& fridge = project.config.fridge;
  std::vector<std::string> header{"line", "kind", "count", "stage"};
  if (options.bounds) {
    header.insert(header.end(), {"predicted_low_W", "predicted_high_W"});
  }
  header.insert(header.end(), {"predicted_mid_W", "measured_W"});
  CsvWriter csv(header);
  OJson lines = OJson::array();
  for (const auto& line : project.config.inventory) {
    const auto bounds = line_passive_profile(line, fridge, project.catalog);
    OJson jl;
    jl["line"] = line.name;
    jl["kind"] = to_string(line.kind);
    jl["count"] = line.count;
    OJson stages = OJson::object();
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      const auto& name = fridge.stages[i].name;
      auto m = line.measured_passive_W.find(name);
      std::optional<double> measured;
      if (m != line.measured_passive_W.end()) measured = m->second;
      std::vector<std::string> row{line.name, to_string(line.kind), std::to_string(line.count), name};
      if (options.bounds) {
        row.push_back(format_number(bounds[i].low));
        row.push_back(format_number(bounds[i].high));
      }
      row.push_back(format_number(bounds[i].mid()));
      row.push_back(measured ? format_number(*measured) : "");
      csv.row(row);
      OJson js;
      if (options.bounds) {
        js["low_W"] = bounds[i].low;
        js["high_W"] = bounds[i].high;
      }
      js["mid_W"] = bounds[i].mid();
      js["measured_W"] = number_or_null(measured);
      stages[name] = js;
    }
    jl["stages"] = stages;
    lines.push_back(jl);
  }
  OJson summary;
  summary["command"] = "passive";
  summary["config"] = project.config.origin;
  summary["unit"] = "W per line";
  summary["lines"] = lines;
  CommandResult r;
  r.artifacts.emplace_back("passive.csv", csv.str());
  r.artifacts.emplace_back("passive.json", dump(summary));
  r.summary = dump(summary);
  if (project.config.inventory.empty()) r.notices.push_back("inventory is empty");
  return r;
}

CommandResult run_noise(const Project& project, const NoiseOptions& o) {
  const auto& fridge = project.config.fridge;
  const auto& configs = project.config.noise.configurations;
  std::vector<double> selected;
  if (o.configuration == "custom") {
    if (o.custom_dB.size() != fridge.stages.size()) {
      throw Error(ErrorCode::invalid_argument, "custom configuration needs " +
                                                   std::to_string(fridge.stages.size()) + " dB values");
    }
    selected = o.custom_dB;
  } else {
    auto it = configs.find(o.configuration);
    if (it == configs.end()) {
      throw Error(ErrorCode::lookup, "unknown attenuator configuration '" + o.configuration + "'");
    }
    selected = it->second;
  }

  const LineSpec line = make_attenuated_line(fridge, project.config.noise.cable, selected);
  const auto chain = line_noise_chain(line, fridge, project.catalog, o.frequency_Hz, o.with_cable_loss);
  const auto profile = cascade_photon_number(chain, o.frequency_Hz, o.n_input);

  CsvWriter prof({"index", "element", "n"});
  for (std::size_t k = 0; k < profile.n.size(); ++k) {
    prof.row({std::to_string(k), profile.labels[k], format_number(profile.n[k])});
  }

  auto h4a = db_header(fridge);
  h4a.insert(h4a.begin(), "configuration");
  h4a.insert(h4a.end(), {"n_mxc_lossless", "n_mxc_with_cable_loss"});
  CsvWriter fig4a(h4a);
  CsvWriter fig4b({"configuration", "stage", "active_W", "fraction"});
  const AttenContext lossless = noise_context(project, o.frequency_Hz, false);
  const AttenContext lossy = noise_context(project, o.frequency_Hz, true);
  std::map<std::string, std::vector<double>> all = configs;
  if (o.configuration == "custom") all["custom"] = selected;
  for (const auto& [name, dB] : all) {
    const auto a = evaluate_config(dB, lossless);
    const auto b = evaluate_config(dB, lossy);
    std::vector<std::string> row{name};
    for (double v : dB) row.push_back(format_number(v));
    row.push_back(format_number(a.n_mxc));
    row.push_back(format_number(b.n_mxc));
    fig4a.row(row);
    for (std::size_t i = 0; i < fridge.stages.size(); ++i) {
      fig4b.row({name, fridge.stages[i].name,
                 format_number(a.fractions[i] * fridge.stages[i].cooling_power_W),
                 format_number(a.fractions[i])});
    }
  }

  std::vector<double> ref_db;
  for (double a : reference_attenuation(fridge, o.frequency_Hz)) ref_db.push_back(ratio_to_db(a));
  OJson summary;
  summary["command"] = "noise";
  summary["configuration"] = o.configuration;
  summary["attenuation_dB"] = stage_map(fridge, selected);
  summary["frequency_Hz"] = o.frequency_Hz;
  summary["with_cable_loss"] = o.with_cable_loss;
  summary["n_input"] = profile.n.front();
  summary["n_mxc"] = profile.output();
  summary["reference_attenuation_dB"] = stage_map(fridge, ref_db);
  CommandResult r;
  r.artifacts.emplace_back("noise_profile.csv", prof.str());
  r.artifacts.emplace_back("fig4a.csv", fig4a.str());
  r.artifacts.emplace_back("fig4b.csv", fig4b.str());
  r.artifacts.emplace_back("noise.json", dump(summary));
  r.summary = dump(summary);
  return r;
}

namespace {

OJson report_json(const BudgetReport& rep, const FridgeModel& fridge) {
  OJson stages = OJson::array();
  for (const auto& s : rep.stages) {
    OJson js;
    js["stage"] = s.stage;
    js["passive_W"] = s.passive_W;
    js["passive_bounds_W"] = {s.passive_bounds_W.low, s.passive_bounds_W.high};
    js["active_W"] = s.active_W;
    js["radiative_W"] = s.radiative_W;
    js["radiative_reported_W"] = s.radiative_reported_W;
    js["total_W"] = s.total_W;
    js["cooling_W"] = s.cooling_W;
    js["fraction"] = s.fraction;
    OJson pk = OJson::object();
    for (const auto& [k, v] : s.passive_by_kind) pk[k] = v;
    OJson ak = OJson::object();
    for (const auto& [k, v] : s.active_by_source) ak[k] = v;
    js["passive_by_kind_W"] = pk;
    js["active_by_source_W"] = ak;
    stages.push_back(js);
  }
  OJson j;
  j["stages"] = stages;
  j["n_mxc"] = number_or_null(rep.n_mxc);
  if (rep.predicted_temperatures_K) {
    j["predicted_temperatures_K"] = stage_map(fridge, *rep.predicted_temperatures_K);
  } else {
    j["predicted_temperatures_K"] = nullptr;
  }
  j["rt_dissipation_W"] = rep.rt_dissipation_W;
  j["notes"] = rep.notes;
  return j;
}

std::string report_csv(const BudgetReport& rep) {
  CsvWriter csv({"stage", "quantity", "value_W", "fraction", "bound_low", "bound_high"});
  for (const auto& s : rep.stages) {
    auto frac = [&](double w) { return format_number(w / s.cooling_W); };
    csv.row({s.stage, "passive", format_number(s.passive_W), frac(s.passive_W),
             format_number(s.passive_bounds_W.low), format_number(s.passive_bounds_W.high)});
    for (const auto& [k, v] : s.passive_by_kind) {
      csv.row({s.stage, "passive:" + k, format_number(v), frac(v), "", ""});
    }
    csv.row({s.stage, "active", format_number(s.active_W), frac(s.active_W), "", ""});
    for (const auto& [k, v] : s.active_by_source) {
      csv.row({s.stage, "active:" + k, format_number(v), frac(v), "", ""});
    }
    csv.row({s.stage, "radiative", format_number(s.radiative_W), frac(s.radiative_W), "", ""});
    if (s.radiative_reported_W != 0.0) {
      csv.row({s.stage, "radiative_in_cooling_spec", format_number(s.radiative_reported_W),
               frac(s.radiative_reported_W), "", ""});
    }
    csv.row({s.stage, "total", format_number(s.total_W), format_number(s.fraction), "", ""});
    csv.row({s.stage, "cooling", format_number(s.cooling_W), "1", "", ""});
  }
  return csv.str();
}

std::string drive_dissipation_csv(const Project& p) {
  const auto& fridge = p.config.fridge;
  LineSpec line;
  bool found = false;
  for (const auto& l : p.config.inventory) {
    if (l.kind == LineKind::drive) {
      line = l;
      found = true;
      break;
    }
  }
  if (!found) {
    line = make_attenuated_line(fridge, p.config.noise.cable, builtin_configurations().at("C3"));
  }
  CsvWriter csv({"case", "input_dBm", "frequency_Hz", "stage", "dissipated_W"});
  struct Case {
    const char* name;
    double dbm;
    double f;
  };
  for (const Case c : {Case{"10dBm_10MHz", 10.0, 1e7}, Case{"16dBm_5GHz", 16.0, 5e9}}) {
    const auto loads = active_loads_per_stage(line, dbm_to_watts(c.dbm), c.f, fridge, p.catalog, true);
    csv.row({c.name, format_number(c.dbm), format_number(c.f), "RT", format_number(loads.rt_W)});
    for (std::size_t i = 0; i < fridge.stages.size(); ++i) {
      csv.row({c.name, format_number(c.dbm), format_number(c.f), fridge.stages[i].name,
               format_number(loads.stage_W[i])});
    }
    csv.row({c.name, format_number(c.dbm), format_number(c.f), "delivered",
             format_number(loads.delivered_W)});
  }
  return csv.str();
}

}  // namespace

CommandResult run_budget(const Project& project) {
  const BudgetInput input = budget_input(project.config);
  BudgetReport rep;
  OJson summary;
  summary["command"] = "budget";
  summary["config"] = project.config.origin;
  if (!project.config.description.empty()) summary["description"] = project.config.description;
  FridgeModel used = input.fridge;
  if (project.config.scenario) {
    const auto res = scale_scenario(input, project.catalog, *project.config.scenario);
    rep = res.report;
    used = res.input.fridge;
    OJson sc;
    sc["diameter_scale"] = project.config.scenario->diameter_scale;
    sc["flux_current_zeroed"] = project.config.scenario->flux_current_zeroed;
    summary["scenario"] = sc;
  } else {
    rep = total_budget(input, project.catalog);
  }
  summary["qubits"] = input.qubits;
  const int max_qubits = max_qubit_estimate(rep, input.qubits);
  if (max_qubits == std::numeric_limits<int>::max()) {
    summary["max_qubits"] = nullptr;
  } else {
    summary["max_qubits"] = max_qubits;
  }
  summary["report"] = report_json(rep, used);
  const PulsePowers pulse = pi_pulse_powers(PulseSpec{});
  OJson pj;
  pj["peak_dBm"] = watts_to_dbm(pulse.peak_W);
  pj["average_dBm"] = watts_to_dbm(pulse.average_W);
  pj["line_average_dBm"] = watts_to_dbm(pulse.line_average_W);
  pj["quoted_peak_dBm"] = kQuotedPeakDbm;
  pj["peak_discrepancy_dB"] = kQuotedPeakDbm - watts_to_dbm(pulse.peak_W);
  pj["drive_target_dBm"] = input.plan.drive_target_dBm;
  summary["drive_pulse"] = pj;
  CommandResult r;
  r.artifacts.emplace_back("fig9.csv", report_csv(rep));
  r.artifacts.emplace_back("fig5.csv", drive_dissipation_csv(project));
  r.artifacts.emplace_back("budget.json", dump(summary));
  r.summary = dump(summary);
  if (project.config.inventory.empty()) r.notices.push_back("inventory is empty");
  return r;
}

CommandResult run_optimize(const Project& project, const OptimizeOptions& o) {
  const auto& fridge = project.config.fridge;
  SearchConstraints sc = project.config.optimize;
  if (o.total_dB) sc.total_dB = *o.total_dB;
  if (o.allowed_dB) sc.allowed_dB = *o.allowed_dB;
  for (const auto& [k, v] : o.max_fraction) {
    fridge.stage_index(k);
    sc.max_fraction[k] = v;
  }
  if (o.objective) sc.objective = objective_from_string(*o.objective);
  if (o.count_penalty) sc.count_penalty = *o.count_penalty;
  if (o.include_infeasible) sc.include_infeasible = *o.include_infeasible;

  const AttenContext ctx = noise_context(project, project.config.plan.noise_frequency_Hz,
                                         project.config.plan.noise_with_cable_loss);
  const auto ranked = enumerate(sc, ctx);

  auto header = db_header(fridge);
  header.insert(header.begin(), "rank");
  header.push_back("attenuators");
  header.push_back("n_mxc");
  for (const auto& s : fridge.stages) header.push_back("fraction_" + s.name);
  header.push_back("feasible");
  CsvWriter csv(header);
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    const auto& c = ranked[k];
    std::vector<std::string> row{std::to_string(k + 1)};
    for (double v : c.stage_dB) row.push_back(format_number(v));
    row.push_back(std::to_string(c.attenuator_count));
    row.push_back(format_number(c.n_mxc));
    for (double f : c.fractions) row.push_back(format_number(f));
    row.push_back(c.feasible ? "true" : "false");
    csv.row(row);
  }

  OJson summary;
  summary["command"] = "optimize";
  summary["total_dB"] = sc.total_dB;
  summary["allowed_dB"] = sc.allowed_dB;
  OJson mf = OJson::object();
  for (const auto& [k, v] : sc.max_fraction) mf[k] = v;
  summary["max_fraction"] = mf;
  summary["objective"] = to_string(sc.objective);
  summary["candidates"] = ranked.size();
  CommandResult r;
  const bool any_feasible =
      std::any_of(ranked.begin(), ranked.end(), [](const auto& c) { return c.feasible; });
  if (any_feasible) {
    const auto& best = ranked.front();
    summary["best"] = {{"attenuation_dB", stage_map(fridge, best.stage_dB)},
                       {"n_mxc", best.n_mxc},
                       {"fractions", stage_map(fridge, best.fractions)}};
    if (o.continuous) {
      const auto refined = refine_continuous(best, sc, ctx);
      summary["continuous"] = {{"attenuation_dB", stage_map(fridge, refined.stage_dB)},
                               {"n_mxc", refined.n_mxc},
                               {"feasible", refined.feasible}};
    }
  } else {
    summary["best"] = nullptr;
    r.notices.push_back("no configuration satisfies the constraints");
  }
  r.artifacts.emplace_back("ranked.csv", csv.str());
  r.artifacts.emplace_back("optimize.json", dump(summary));
  r.summary = dump(summary);
  return r;
}

CommandResult run_sweep(const Project& project, const SweepOptions& o) {
  const auto& fridge = project.config.fridge;
  const AttenContext ctx = noise_context(project, o.frequency_Hz, o.with_cable_loss);
  if (o.fixed_dB.size() != fridge.stages.size()) {
    throw Error(ErrorCode::invalid_argument,
                "fixed attenuation needs " + std::to_string(fridge.stages.size()) + " values");
  }
  const auto curve = sweep_single_stage(o.stage, frange(o.from_dB, o.to_dB, o.step_dB), o.fixed_dB, ctx);
  CsvWriter csv({"stage", "attenuation_dB", "n_mxc"});
  for (const auto& [db, n] : curve) csv.row({o.stage, format_number(db), format_number(n)});
  OJson summary;
  summary["command"] = "sweep";
  summary["stage"] = o.stage;
  summary["points"] = curve.size();
  summary["fixed_dB"] = stage_map(fridge, o.fixed_dB);
  summary["frequency_Hz"] = o.frequency_Hz;
  CommandResult r;
  r.artifacts.emplace_back("sweep.csv", csv.str());
  r.summary = dump(summary);
  if (curve.empty()) r.notices.push_back("empty sweep range");
  return r;
}

CommandResult run_fit(const Project& project, const std::vector<FitInput>& inputs,
                      const FitOptions& o) {
  const auto& fridge = project.config.fridge;
  if (inputs.empty()) throw Error(ErrorCode::invalid_argument, "no measurement files given");
  CommandResult r;
  OJson summary;
  summary["command"] = "fit";
  summary["kind"] = o.kind;
  if (o.kind == "reference") {
    std::vector<MeasurementSeries> series;
    for (const auto& in : inputs) series.push_back(parse_measurement_csv(in.text, fridge, in.origin));
    ReferenceFitOptions fo;
    fo.window_fraction = o.window_fraction;
    const auto rc = fit_reference(series, fridge, fo);
    OJson resp;
    resp["dP_dT_W_per_K"] = rc.dP_dT;
    resp["dT_dP_cross_K_per_W"] = rc.dT_dP_cross;
    summary["response"] = resp;
    summary["residual_rms_K"] = stage_map(fridge, rc.residual_rms_K);
    OJson rows = OJson::object();
    for (std::size_t i = 0; i < rc.window_rows.size(); ++i) rows[fridge.stages[i].name] = rc.window_rows[i];
    summary["window_rows"] = rows;
    summary["window_fraction"] = o.window_fraction;
    summary["warnings"] = rc.warnings;
    const auto still = still_flow_normalize(o.still_temperature_K);
    summary["still_flow"] = {{"validity", to_string(still.validity)}, {"message", still.message}};
    CsvWriter csv({"stage", "dP_dT_W_per_K", "dT_dP_cross_K_per_W", "residual_rms_K", "window_rows"});
    for (std::size_t i = 0; i < fridge.stages.size(); ++i) {
      csv.row({fridge.stages[i].name, format_number(rc.dP_dT[i]), format_number(rc.dT_dP_cross[i]),
               format_number(rc.residual_rms_K[i]), std::to_string(rc.window_rows[i])});
    }
    r.artifacts.emplace_back("coefficients.csv", csv.str());
    r.notices = rc.warnings;
  } else if (o.kind == "resistance") {
    CsvWriter csv({"source", "column", "r_eff_ohm", "std_error_ohm", "points"});
    OJson fits = OJson::array();
    for (const auto& in : inputs) {
      const auto table = parse_resistance_csv(in.text, in.origin);
      for (std::size_t k = 0; k < table.columns.size(); ++k) {
        const auto fit = fit_effective_resistance(table.data[k]);
        csv.row({in.origin, table.columns[k], format_number(fit.r_eff_ohm),
                 format_number(fit.std_error_ohm), std::to_string(table.data[k].size())});
        fits.push_back({{"source", in.origin},
                        {"column", table.columns[k]},
                        {"r_eff_ohm", fit.r_eff_ohm},
                        {"std_error_ohm", fit.std_error_ohm}});
      }
    }
    summary["fits"] = fits;
    r.artifacts.emplace_back("resistance.csv", csv.str());
  } else {
    throw Error(ErrorCode::invalid_argument, "fit kind must be 'reference' or 'resistance'");
  }
  r.artifacts.emplace_back("coefficients.json", dump(summary));
  r.summary = dump(summary);
  return r;
}

namespace {

detail::Json options_doc(const std::string& json) {
  if (json.empty()) return detail::Json::object();
  return detail::parse_json_text(json, "<options>");
}

}  // namespace

PassiveOptions parse_passive_options(const std::string& json) {
  const auto doc = options_doc(json);
  ObjectReader r(doc, "options", ErrorCode::invalid_argument);
  PassiveOptions o;
  o.bounds = r.boolean_or("bounds", o.bounds);
  r.finish();
  return o;
}

NoiseOptions parse_noise_options(const std::string& json) {
  const auto doc = options_doc(json);
  ObjectReader r(doc, "options", ErrorCode::invalid_argument);
  NoiseOptions o;
  o.configuration = r.string_or("configuration", o.configuration);
  if (r.has("attenuation_dB")) o.custom_dB = r.number_list("attenuation_dB");
  o.frequency_Hz = r.number_or("frequency_Hz", o.frequency_Hz);
  o.with_cable_loss = r.boolean_or("with_cable_loss", o.with_cable_loss);
  o.n_input = r.opt_number("n_input");
  r.finish();
  if (!(o.frequency_Hz > 0.0)) r.fail("frequency_Hz", "must be > 0");
  return o;
}

OptimizeOptions parse_optimize_options(const std::string& json) {
  const auto doc = options_doc(json);
  ObjectReader r(doc, "options", ErrorCode::invalid_argument);
  OptimizeOptions o;
  o.total_dB = r.opt_number("total_dB");
  if (r.has("allowed_dB")) o.allowed_dB = r.number_list("allowed_dB");
  if (r.has("max_fraction")) {
    const auto& v = r.raw("max_fraction");
    if (!v.is_object()) r.fail("max_fraction", "expected object");
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!it->is_number()) r.fail("max_fraction." + it.key(), "expected number");
      o.max_fraction[it.key()] = it->get<double>();
    }
  }
  o.objective = r.opt_string("objective");
  if (r.has("count_penalty")) o.count_penalty = r.boolean_or("count_penalty", false);
  if (r.has("include_infeasible")) o.include_infeasible = r.boolean_or("include_infeasible", false);
  o.continuous = r.boolean_or("continuous", false);
  r.finish();
  return o;
}

SweepOptions parse_sweep_options(const std::string& json) {
  const auto doc = options_doc(json);
  ObjectReader r(doc, "options", ErrorCode::invalid_argument);
  SweepOptions o;
  o.stage = r.string_or("stage", o.stage);
  o.from_dB = r.number_or("from_dB", o.from_dB);
  o.to_dB = r.number_or("to_dB", o.to_dB);
  o.step_dB = r.number_or("step_dB", o.step_dB);
  if (r.has("fixed_dB")) o.fixed_dB = r.number_list("fixed_dB");
  o.frequency_Hz = r.number_or("frequency_Hz", o.frequency_Hz);
  o.with_cable_loss = r.boolean_or("with_cable_loss", o.with_cable_loss);
  r.finish();
  return o;
}

FitOptions parse_fit_options(const std::string& json) {
  const auto doc = options_doc(json);
  ObjectReader r(doc, "options", ErrorCode::invalid_argument);
  FitOptions o;
  o.kind = r.string_or("kind", o.kind);
  o.window_fraction = r.number_or("window_fraction", o.window_fraction);
  o.still_temperature_K = r.opt_number("still_temperature_K");
  r.finish();
  return o;
}

}  // namespace cryo
