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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cryobudget.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;

int exit_code_for(cb_status status) {
  switch (status) {
    case CB_OK: return kExitOk;
    case CB_ERR_INVALID_ARGUMENT:
    case CB_ERR_LOOKUP:
    case CB_ERR_TOPOLOGY:
    case CB_ERR_CONFIG:
    case CB_ERR_PARSE:
    case CB_ERR_IO: return kExitUsage;
    default: return kExitComputation;
  }
}

void emit_error(const std::string& kind, const std::string& message) {
  json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  std::cerr << j.dump() << "\n";
}

void emit_notice(const std::string& message) {
  std::cerr << json{{"notice", message}}.dump() << "\n";
}

struct Failure {
  int code;
};

void check(cb_status status) {
  if (status != CB_OK) {
    emit_error(cb_status_name(status), cb_last_error());
    throw Failure{exit_code_for(status)};
  }
}

[[noreturn]] void usage_failure(const std::string& message) {
  emit_error("usage", message);
  throw Failure{kExitUsage};
}

struct ProjectHandle {
  cb_project* p = nullptr;
  ~ProjectHandle() { cb_project_free(p); }
};

struct ResultHandle {
  cb_result* r = nullptr;
  ~ResultHandle() { cb_result_free(r); }
};

struct Common {
  std::string config_path;
  std::string preset;
  std::string out_dir;
  std::string print;
};

void open(const Common& c, ProjectHandle& h) {
  if (!c.config_path.empty() && !c.preset.empty()) {
    usage_failure("give either a config file or --preset, not both");
  }
  if (!c.preset.empty()) {
    check(cb_project_open_preset(c.preset.c_str(), &h.p));
  } else if (!c.config_path.empty()) {
    check(cb_project_open(c.config_path.c_str(), &h.p));
  } else {
    check(cb_project_open_default(&h.p));
  }
}

void deliver(const Common& c, const cb_result* r) {
  for (size_t k = 0; k < cb_result_notice_count(r); ++k) emit_notice(cb_result_notice(r, k));
  if (!c.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(c.out_dir, ec);
    if (ec) {
      emit_error("io", "cannot create " + c.out_dir + ": " + ec.message());
      throw Failure{kExitUsage};
    }
    for (size_t k = 0; k < cb_result_artifact_count(r); ++k) {
      const auto path = std::filesystem::path(c.out_dir) / cb_result_artifact_name(r, k);
      std::ofstream f(path, std::ios::binary);
      f << cb_result_artifact_content(r, k);
      if (!f) {
        emit_error("io", "cannot write " + path.string());
        throw Failure{kExitUsage};
      }
    }
  }
  if (!c.print.empty()) {
    for (size_t k = 0; k < cb_result_artifact_count(r); ++k) {
      if (c.print == cb_result_artifact_name(r, k)) {
        std::cout << cb_result_artifact_content(r, k);
        return;
      }
    }
    usage_failure("no artifact named '" + c.print + "'");
  }
  std::cout << cb_result_summary(r);
}

void add_common(CLI::App* app, Common& c, bool positional_config) {
  if (positional_config) {
    app->add_option("config", c.config_path, "Project configuration (JSON)");
  } else {
    app->add_option("--project", c.config_path, "Project configuration (JSON)");
  }
  app->add_option("--preset", c.preset, "Bundled preset name");
  app->add_option("-o,--out", c.out_dir, "Directory for CSV/JSON artifacts");
  app->add_option("--print", c.print, "Write this artifact to stdout instead of the summary");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    emit_error("io", "cannot read " + path);
    throw Failure{kExitUsage};
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<double> parse_db_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      usage_failure(flag + ": '" + item + "' is not a number");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat-load, noise and wiring budget calculator for dilution refrigerators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cb_version()));

  Common common;

  auto* passive = app.add_subcommand("passive", "Passive conductive load per line and stage");
  add_common(passive, common, true);
  bool bounds = false;
  passive->add_flag("--bounds", bounds, "Report low/high thermalization bounds");

  auto* noise = app.add_subcommand("noise", "Thermal photon occupation at the mixing chamber");
  add_common(noise, common, false);
  noise->add_option("config_file", common.config_path, "Project configuration (JSON)");
  std::string configuration = "C3";
  std::string custom;
  double frequency = 6e9;
  bool cable_loss = false;
  double n_input = -1.0;
  noise->add_option("--config", configuration, "Attenuator configuration (C1..C4 or custom)")
      ->capture_default_str();
  noise->add_option("--atten", custom, "Comma separated dB per stage for --config custom");
  noise->add_option("--freq", frequency, "Frequency in Hz")->capture_default_str();
  noise->add_flag("--with-cable-loss", cable_loss, "Include distributed cable attenuation");
  noise->add_option("--n-input", n_input, "Input occupation (default: room temperature)");

  auto* budget = app.add_subcommand("budget", "Total heat budget per stage");
  add_common(budget, common, true);

  auto* fit = app.add_subcommand("fit", "Fit response coefficients or effective resistance");
  add_common(fit, common, false);
  std::vector<std::string> files;
  std::string kind = "reference";
  double window = 0.30;
  double still_temperature = -1.0;
  fit->add_option("measurements", files, "Measurement CSV files")->required();
  fit->add_option("--kind", kind, "reference or resistance")
      ->check(CLI::IsMember({"reference", "resistance"}));
  fit->add_option("--window", window, "Relative temperature-rise window for linear fits");
  fit->add_option("--still-temperature", still_temperature, "Still temperature for flow check (K)");

  auto* optimize = app.add_subcommand("optimize", "Rank attenuator configurations");
  add_common(optimize, common, true);
  double total_db = 0;
  std::string allowed;
  std::vector<std::string> max_fraction;
  std::string objective;
  bool count_penalty = false;
  bool include_infeasible = false;
  bool continuous = false;
  auto* total_opt = optimize->add_option("--total-db", total_db, "Total attenuation in dB");
  optimize->add_option("--allowed", allowed, "Comma separated allowed attenuator values (dB)");
  optimize->add_option("--max-fraction", max_fraction, "Constraint stage=fraction (repeatable)");
  optimize->add_option("--objective", objective, "min_n_mxc, min_max_fraction or pareto")
      ->check(CLI::IsMember({"min_n_mxc", "min_max_fraction", "pareto"}));
  optimize->add_flag("--count-penalty", count_penalty, "Rank configurations with fewer attenuators first");
  optimize->add_flag("--include-infeasible", include_infeasible, "List infeasible candidates");
  optimize->add_flag("--continuous", continuous, "Refine the best candidate continuously");

  auto* sweep = app.add_subcommand("sweep", "n_MXC versus attenuation at one stage");
  add_common(sweep, common, true);
  std::string sweep_stage = "4K";
  double from = 0, to = 40, step = 1;
  std::string fixed;
  double sweep_freq = 6e9;
  bool sweep_loss = false;
  sweep->add_option("--stage", sweep_stage, "Stage to sweep")->capture_default_str();
  sweep->add_option("--from", from, "First attenuation (dB)")->capture_default_str();
  sweep->add_option("--to", to, "Last attenuation (dB)")->capture_default_str();
  sweep->add_option("--step", step, "Step (dB)")->capture_default_str();
  sweep->add_option("--fixed", fixed, "Comma separated dB for the other stages");
  sweep->add_option("--freq", sweep_freq, "Frequency in Hz")->capture_default_str();
  sweep->add_flag("--with-cable-loss", sweep_loss, "Include distributed cable attenuation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what());
    return kExitUsage;
  }

  try {
    ProjectHandle project;
    ResultHandle result;
    open(common, project);
    if (*passive) {
      check(cb_run_passive(project.p, json{{"bounds", bounds}}.dump().c_str(), &result.r));
    } else if (*noise) {
      json o{{"configuration", configuration},
             {"frequency_Hz", frequency},
             {"with_cable_loss", cable_loss}};
      if (!custom.empty()) o["attenuation_dB"] = parse_db_list(custom, "--atten");
      if (n_input >= 0.0) o["n_input"] = n_input;
      check(cb_run_noise(project.p, o.dump().c_str(), &result.r));
    } else if (*budget) {
      check(cb_run_budget(project.p, &result.r));
    } else if (*fit) {
      std::vector<std::string> texts;
      for (const auto& f : files) texts.push_back(read_file(f));
      std::vector<const char*> origins, ptrs;
      for (size_t k = 0; k < files.size(); ++k) {
        origins.push_back(files[k].c_str());
        ptrs.push_back(texts[k].c_str());
      }
      json o{{"kind", kind}, {"window_fraction", window}};
      if (still_temperature >= 0.0) o["still_temperature_K"] = still_temperature;
      check(cb_run_fit(project.p, files.size(), origins.data(), ptrs.data(), o.dump().c_str(),
                       &result.r));
    } else if (*optimize) {
      json o = json::object();
      if (total_opt->count() > 0) o["total_dB"] = total_db;
      if (!allowed.empty()) o["allowed_dB"] = parse_db_list(allowed, "--allowed");
      if (!max_fraction.empty()) {
        json mf = json::object();
        for (const auto& item : max_fraction) {
          const auto eq = item.find('=');
          if (eq == std::string::npos || eq == 0) {
            usage_failure("--max-fraction expects stage=value, got '" + item + "'");
          }
          mf[item.substr(0, eq)] = parse_db_list(item.substr(eq + 1), "--max-fraction").at(0);
        }
        o["max_fraction"] = mf;
      }
      if (!objective.empty()) o["objective"] = objective;
      if (count_penalty) o["count_penalty"] = true;
      if (include_infeasible) o["include_infeasible"] = true;
      if (continuous) o["continuous"] = true;
      check(cb_run_optimize(project.p, o.dump().c_str(), &result.r));
    } else if (*sweep) {
      json o{{"stage", sweep_stage},
             {"from_dB", from},
             {"to_dB", to},
             {"step_dB", step},
             {"frequency_Hz", sweep_freq},
             {"with_cable_loss", sweep_loss}};
      if (!fixed.empty()) o["fixed_dB"] = parse_db_list(fixed, "--fixed");
      check(cb_run_sweep(project.p, o.dump().c_str(), &result.r));
    }
    deliver(common, result.r);
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitOk;
}
