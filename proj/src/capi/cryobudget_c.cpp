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

#include "cryobudget.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/commands.hpp"
#include "core/errors.hpp"
#include "core/materials.hpp"
#include "core/noise.hpp"
#include "core/signals.hpp"
#include "core/units.hpp"
#include "json.hpp"

struct cb_catalog {
  cryo::Catalog catalog;
};

struct cb_project {
  cryo::Project project;
};

struct cb_result {
  cryo::CommandResult result;
};

namespace {

thread_local std::string g_last_error;

cb_status to_status(cryo::ErrorCode code) {
  using cryo::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return CB_ERR_INVALID_ARGUMENT;
    case ErrorCode::range: return CB_ERR_RANGE;
    case ErrorCode::lookup: return CB_ERR_LOOKUP;
    case ErrorCode::topology: return CB_ERR_TOPOLOGY;
    case ErrorCode::config: return CB_ERR_CONFIG;
    case ErrorCode::parse: return CB_ERR_PARSE;
    case ErrorCode::domain: return CB_ERR_DOMAIN;
    case ErrorCode::io: return CB_ERR_IO;
    case ErrorCode::fit: return CB_ERR_FIT;
    case ErrorCode::internal: return CB_ERR_INTERNAL;
  }
  return CB_ERR_INTERNAL;
}

template <class F>
cb_status guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return CB_OK;
  } catch (const cryo::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return CB_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw cryo::Error(cryo::ErrorCode::invalid_argument, std::string(what) + " must not be NULL");
  }
}

std::string opt_text(const char* s) { return s ? std::string(s) : std::string(); }

template <class F>
cb_status run_command(const cb_project* project, cb_result** out, F&& f) {
  return guard([&] {
    require(project, "project");
    require(out, "out");
    *out = nullptr;
    *out = new cb_result{f(project->project)};
  });
}

}  // namespace

extern "C" {

const char* cb_version(void) { return "0.1.0"; }

const char* cb_last_error(void) { return g_last_error.c_str(); }

const char* cb_status_name(cb_status status) {
  switch (status) {
    case CB_OK: return "ok";
    case CB_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case CB_ERR_RANGE: return "range";
    case CB_ERR_LOOKUP: return "lookup";
    case CB_ERR_TOPOLOGY: return "topology";
    case CB_ERR_CONFIG: return "config";
    case CB_ERR_PARSE: return "parse";
    case CB_ERR_DOMAIN: return "domain";
    case CB_ERR_IO: return "io";
    case CB_ERR_FIT: return "fit";
    case CB_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

cb_status cb_catalog_load(const char* path, cb_catalog** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    const std::string file = path ? std::string(path) : cryo::default_data_dir() + "/catalog.json";
    *out = new cb_catalog{cryo::Catalog::load_file(file)};
  });
}

void cb_catalog_free(cb_catalog* catalog) { delete catalog; }

cb_status cb_conductivity_integral(const cb_catalog* catalog, const char* material, double t_low_K,
                                   double t_high_K, double* out_W_per_m) {
  return guard([&] {
    require(catalog, "catalog");
    require(material, "material");
    require(out_W_per_m, "out");
    *out_W_per_m =
        cryo::conductivity_integral(catalog->catalog.material(material), t_low_K, t_high_K);
  });
}

cb_status cb_cable_attenuation_db(const cb_catalog* catalog, const char* cable,
                                  double frequency_Hz, double length_m, int cryogenic,
                                  double* out_dB) {
  return guard([&] {
    require(catalog, "catalog");
    require(cable, "cable");
    require(out_dB, "out");
    *out_dB = cryo::cable_attenuation_db(catalog->catalog.cable(cable), frequency_Hz, length_m,
                                         cryogenic != 0);
  });
}

cb_status cb_bose_einstein(double temperature_K, double frequency_Hz, double* out) {
  return guard([&] {
    require(out, "out");
    *out = cryo::bose_einstein(temperature_K, frequency_Hz);
  });
}

cb_status cb_cascade_photon_number(size_t count, const double* attenuation_dB,
                                   const double* temperature_K, double frequency_Hz,
                                   double n_input, double* out) {
  return guard([&] {
    require(out, "out");
    if (count > 0) {
      require(attenuation_dB, "attenuation_dB");
      require(temperature_K, "temperature_K");
    }
    cryo::AttenuatorChain chain;
    for (size_t k = 0; k < count; ++k) {
      chain.elements.emplace_back(cryo::DiscreteAttenuator{
          cryo::db_to_ratio(attenuation_dB[k]), temperature_K[k], "A" + std::to_string(k + 1)});
    }
    std::optional<double> n0;
    if (n_input >= 0.0) n0 = n_input;
    *out = cryo::cascade_photon_number(chain, frequency_Hz, n0).output();
  });
}

cb_status cb_pi_pulse_powers(double sigma_s, double duration_s, double qubit_omega,
                             double* peak_W, double* average_W) {
  return guard([&] {
    cryo::PulseSpec spec;
    spec.sigma_s = sigma_s;
    spec.duration_s = duration_s;
    spec.qubit_omega = qubit_omega;
    const auto p = cryo::pi_pulse_powers(spec);
    if (peak_W) *peak_W = p.peak_W;
    if (average_W) *average_W = p.average_W;
  });
}

cb_status cb_flux_average_load(double r_eff_ohm, double i_max_A, double* out_W) {
  return guard([&] {
    require(out_W, "out");
    cryo::FluxBiasSpec spec;
    spec.r_eff_mxc_ohm = r_eff_ohm;
    spec.i_max_A = i_max_A;
    spec.validate();
    *out_W = cryo::flux_bias_average_load(spec).mxc_W;
  });
}

cb_status cb_project_open(const char* path, cb_project** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    *out = new cb_project{cryo::open_project(path)};
  });
}

cb_status cb_project_open_preset(const char* name, cb_project** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    *out = nullptr;
    *out = new cb_project{cryo::open_preset(name)};
  });
}

cb_status cb_project_open_default(cb_project** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    *out = new cb_project{cryo::open_default_project()};
  });
}

void cb_project_free(cb_project* project) { delete project; }

char* cb_preset_names(void) {
  std::string text;
  if (guard([&] { text = nlohmann::json(cryo::preset_names()).dump(); }) != CB_OK) return nullptr;
  char* copy = static_cast<char*>(std::malloc(text.size() + 1));
  if (copy) std::memcpy(copy, text.c_str(), text.size() + 1);
  return copy;
}

void cb_string_free(char* text) { std::free(text); }

cb_status cb_run_passive(const cb_project* project, const char* options_json, cb_result** out) {
  return run_command(project, out, [&](const cryo::Project& p) {
    return cryo::run_passive(p, cryo::parse_passive_options(opt_text(options_json)));
  });
}

cb_status cb_run_noise(const cb_project* project, const char* options_json, cb_result** out) {
  return run_command(project, out, [&](const cryo::Project& p) {
    return cryo::run_noise(p, cryo::parse_noise_options(opt_text(options_json)));
  });
}

cb_status cb_run_budget(const cb_project* project, cb_result** out) {
  return run_command(project, out, [&](const cryo::Project& p) { return cryo::run_budget(p); });
}

cb_status cb_run_optimize(const cb_project* project, const char* options_json, cb_result** out) {
  return run_command(project, out, [&](const cryo::Project& p) {
    return cryo::run_optimize(p, cryo::parse_optimize_options(opt_text(options_json)));
  });
}

cb_status cb_run_sweep(const cb_project* project, const char* options_json, cb_result** out) {
  return run_command(project, out, [&](const cryo::Project& p) {
    return cryo::run_sweep(p, cryo::parse_sweep_options(opt_text(options_json)));
  });
}

cb_status cb_run_fit(const cb_project* project, size_t count, const char* const* origins,
                     const char* const* texts, const char* options_json, cb_result** out) {
  return run_command(project, out, [&](const cryo::Project& p) {
    if (count > 0) require(texts, "texts");
    std::vector<cryo::FitInput> inputs;
    for (size_t k = 0; k < count; ++k) {
      require(texts[k], "texts[k]");
      std::string origin = (origins && origins[k]) ? origins[k] : "input" + std::to_string(k + 1);
      inputs.push_back({origin, texts[k]});
    }
    return cryo::run_fit(p, inputs, cryo::parse_fit_options(opt_text(options_json)));
  });
}

size_t cb_result_artifact_count(const cb_result* result) {
  return result ? result->result.artifacts.size() : 0;
}

const char* cb_result_artifact_name(const cb_result* result, size_t index) {
  if (!result || index >= result->result.artifacts.size()) return nullptr;
  return result->result.artifacts[index].first.c_str();
}

const char* cb_result_artifact_content(const cb_result* result, size_t index) {
  if (!result || index >= result->result.artifacts.size()) return nullptr;
  return result->result.artifacts[index].second.c_str();
}

const char* cb_result_summary(const cb_result* result) {
  return result ? result->result.summary.c_str() : nullptr;
}

size_t cb_result_notice_count(const cb_result* result) {
  return result ? result->result.notices.size() : 0;
}

const char* cb_result_notice(const cb_result* result, size_t index) {
  if (!result || index >= result->result.notices.size()) return nullptr;
  return result->result.notices[index].c_str();
}

void cb_result_free(cb_result* result) { delete result; }

}  // extern "C"
