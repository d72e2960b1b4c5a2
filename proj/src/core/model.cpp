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

#include "core/model.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace cryo {

double FridgeModel::temperature_at(std::size_t position) const {
  if (position == 0) return room_temperature_K;
  if (position > stages.size()) throw Error(ErrorCode::range, "stage position out of range");
  return stages[position - 1].temperature_K;
}

std::string FridgeModel::name_at(std::size_t position) const {
  if (position == 0) return "RT";
  if (position > stages.size()) throw Error(ErrorCode::range, "stage position out of range");
  return stages[position - 1].name;
}

double FridgeModel::length_above(std::size_t position) const {
  if (position == 0 || position > stages.size()) {
    throw Error(ErrorCode::range, "no cable run above position " + std::to_string(position));
  }
  return stages[position - 1].cable_length_above_m;
}

std::size_t FridgeModel::position_of(const std::string& name) const {
  if (name == "RT") return 0;
  return stage_index(name) + 1;
}

std::size_t FridgeModel::stage_index(const std::string& name) const {
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (stages[i].name == name) return i;
  }
  throw Error(ErrorCode::lookup, "unknown stage '" + name + "'");
}

void FridgeModel::validate() const {
  if (stages.empty()) throw Error(ErrorCode::invalid_argument, "fridge has no stages");
  double above = room_temperature_K;
  for (const auto& s : stages) {
    if (s.name.empty() || s.name == "RT") {
      throw Error(ErrorCode::invalid_argument, "invalid stage name '" + s.name + "'");
    }
    if (!(s.temperature_K > 0.0) || !(s.temperature_K < above)) {
      throw Error(ErrorCode::invalid_argument,
                  "stage temperatures must be positive and strictly decreasing (at '" + s.name + "')");
    }
    if (!(s.cooling_power_W > 0.0)) {
      throw Error(ErrorCode::invalid_argument, "stage '" + s.name + "' needs cooling_power > 0");
    }
    if (!(s.cable_length_above_m > 0.0)) {
      throw Error(ErrorCode::invalid_argument, "stage '" + s.name + "' needs cable length > 0");
    }
    above = s.temperature_K;
  }
  for (std::size_t i = 0; i < stages.size(); ++i) {
    for (std::size_t j = i + 1; j < stages.size(); ++j) {
      if (stages[i].name == stages[j].name) {
        throw Error(ErrorCode::invalid_argument, "duplicate stage '" + stages[i].name + "'");
      }
    }
  }
  if (!(still_flow_mol_per_s > 0.0)) throw Error(ErrorCode::invalid_argument, "still flow must be > 0");
  if (mxc_cooling_coefficient < 0.0) {
    throw Error(ErrorCode::invalid_argument, "negative MXC cooling coefficient");
  }
}

FridgeModel FridgeModel::reference() {
  FridgeModel f;
  f.stages = {
      {"50K", 35.0, 30.0, 0.20},      {"4K", 2.85, 1.5, 0.29},   {"Still", 0.882, 40e-3, 0.25},
      {"CP", 0.082, 200e-6, 0.17},    {"MXC", 0.006, 19e-6, 0.14},
  };
  f.still_flow_mol_per_s = 0.69e-3;
  f.mxc_cooling_coefficient = 13e-6 / (0.69e-3 * 0.020 * 0.020);
  return f;
}

namespace {

template <typename E>
struct Names {
  E value;
  const char* text;
};

constexpr Names<LineKind> kLineKinds[] = {
    {LineKind::drive, "drive"},     {LineKind::flux, "flux"}, {LineKind::output_nbti, "output_nbti"},
    {LineKind::output_ss, "output_ss"}, {LineKind::pump, "pump"}, {LineKind::readin, "readin"},
};

constexpr Names<ComponentKind> kComponentKinds[] = {
    {ComponentKind::attenuator, "attenuator"},
    {ComponentKind::ir_filter, "ir_filter"},
    {ComponentKind::lowpass, "lowpass"},
    {ComponentKind::circulator, "circulator"},
    {ComponentKind::directional_coupler, "directional_coupler"},
};

constexpr Names<CenterThermalization> kThermalization[] = {
    {CenterThermalization::always, "always"},
    {CenterThermalization::uncertain, "uncertain"},
    {CenterThermalization::never, "never"},
};

template <typename E, std::size_t N>
std::string name_of(const Names<E> (&table)[N], E value) {
  for (const auto& n : table) {
    if (n.value == value) return n.text;
  }
  return "?";
}

template <typename E, std::size_t N>
E parse_name(const Names<E> (&table)[N], const std::string& text, const char* what) {
  for (const auto& n : table) {
    if (text == n.text) return n.value;
  }
  std::string allowed;
  for (const auto& n : table) allowed += std::string(allowed.empty() ? "" : ", ") + n.text;
  throw Error(ErrorCode::invalid_argument,
              "unknown " + std::string(what) + " '" + text + "' (expected one of " + allowed + ")");
}

}  // namespace

std::string to_string(LineKind kind) { return name_of(kLineKinds, kind); }
LineKind line_kind_from_string(const std::string& text) {
  return parse_name(kLineKinds, text, "line kind");
}
std::string to_string(ComponentKind kind) { return name_of(kComponentKinds, kind); }
ComponentKind component_kind_from_string(const std::string& text) {
  return parse_name(kComponentKinds, text, "component kind");
}
std::string to_string(CenterThermalization value) { return name_of(kThermalization, value); }
CenterThermalization center_thermalization_from_string(const std::string& text) {
  return parse_name(kThermalization, text, "thermalization");
}

double Component::attenuation_db_at(double frequency_Hz) const {
  if (attenuation_curve.empty()) return attenuation_dB;
  const auto& c = attenuation_curve;
  if (frequency_Hz <= c.front().first) return c.front().second;
  if (frequency_Hz >= c.back().first) return c.back().second;
  auto it = std::upper_bound(c.begin(), c.end(), frequency_Hz,
                             [](double f, const auto& p) { return f < p.first; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  return lo.second + (frequency_Hz - lo.first) / (hi.first - lo.first) * (hi.second - lo.second);
}

bool Component::sinks_center() const {
  if (thermalizes_center) return *thermalizes_center;
  return kind == ComponentKind::attenuator || kind == ComponentKind::directional_coupler;
}

std::size_t LineSpec::start_position(const FridgeModel& fridge) const {
  if (runs.empty()) throw Error(ErrorCode::topology, "line '" + name + "' has no cable runs");
  return fridge.position_of(runs.front().from);
}

std::size_t LineSpec::end_position(const FridgeModel& fridge) const {
  if (runs.empty()) throw Error(ErrorCode::topology, "line '" + name + "' has no cable runs");
  return fridge.position_of(runs.back().to);
}

void LineSpec::check_topology(const FridgeModel& fridge) const {
  auto where = [this](const std::string& msg) {
    return Error(ErrorCode::topology, "line '" + name + "': " + msg);
  };
  if (runs.empty()) throw where("no cable runs");
  if (count < 0) throw where("negative line count");
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::size_t a = 0;
    std::size_t b = 0;
    try {
      a = fridge.position_of(runs[i].from);
      b = fridge.position_of(runs[i].to);
    } catch (const Error& e) {
      throw where(e.what());
    }
    if (b <= a) throw where("run " + std::to_string(i) + " does not go downward");
    if (i > 0 && a != prev_end) {
      throw where("gap between '" + runs[i - 1].to + "' and '" + runs[i].from + "'");
    }
    prev_end = b;
  }
  const std::size_t start = start_position(fridge);
  const std::size_t end = end_position(fridge);
  const bool output = kind == LineKind::output_ss || kind == LineKind::output_nbti;
  if (!output) {
    if (start != 0) throw where("must start at RT");
    if (end != fridge.position_count() - 1) {
      throw where("dangling line: ends at '" + runs.back().to + "' instead of '" +
                  fridge.stages.back().name + "'");
    }
  }
  for (const auto& c : components) {
    std::size_t p = 0;
    try {
      p = fridge.position_of(c.stage);
    } catch (const Error& e) {
      throw where(e.what());
    }
    if (p < start || p > end || p == 0) {
      throw where("component on '" + c.stage + "' lies outside the line");
    }
    if (c.attenuation_dB < 0.0) throw where("negative component attenuation");
  }
  for (const auto& [stage, mode] : center_thermalization) {
    try {
      fridge.position_of(stage);
    } catch (const Error& e) {
      throw where(e.what());
    }
  }
}

std::vector<const Component*> LineSpec::components_at(const std::string& stage) const {
  std::vector<const Component*> out;
  for (const auto& c : components) {
    if (c.stage == stage) out.push_back(&c);
  }
  return out;
}

std::vector<double> LineSpec::discrete_attenuation_db(const FridgeModel& fridge,
                                                      double frequency_Hz) const {
  std::vector<double> out(fridge.stages.size(), 0.0);
  for (const auto& c : components) out[fridge.stage_index(c.stage)] += c.attenuation_db_at(frequency_Hz);
  return out;
}

LineSpec make_attenuated_line(const FridgeModel& fridge, const std::string& cable,
                              const std::vector<double>& stage_dB, LineKind kind) {
  if (stage_dB.size() != fridge.stages.size()) {
    throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(fridge.stages.size()) +
                                                 " attenuation values, got " +
                                                 std::to_string(stage_dB.size()));
  }
  LineSpec line;
  line.name = to_string(kind);
  line.kind = kind;
  line.runs.push_back({cable, "RT", fridge.stages.back().name});
  for (std::size_t i = 0; i < stage_dB.size(); ++i) {
    if (stage_dB[i] < 0.0) throw Error(ErrorCode::invalid_argument, "negative attenuation");
    if (stage_dB[i] > 0.0) {
      Component c;
      c.kind = ComponentKind::attenuator;
      c.stage = fridge.stages[i].name;
      c.attenuation_dB = stage_dB[i];
      line.components.push_back(c);
    }
  }
  return line;
}

}  // namespace cryo
