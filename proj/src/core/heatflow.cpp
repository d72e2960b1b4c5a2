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

#include "core/heatflow.hpp"

#include <algorithm>

#include "core/errors.hpp"
#include "core/units.hpp"

namespace cryo {

namespace {

void check_span(double length_m, double t_low_K, double t_high_K) {
  if (!(length_m > 0.0)) throw Error(ErrorCode::invalid_argument, "cable length must be > 0");
  if (!(t_low_K >= 0.0) || !(t_high_K >= t_low_K)) {
    throw Error(ErrorCode::invalid_argument, "need 0 <= T_low <= T_high");
  }
}

}  // namespace

double conductive_load(const CableSpec& cable, double length_m, double t_low_K, double t_high_K,
                       ElementSet elements) {
  check_span(length_m, t_low_K, t_high_K);
  if (t_low_K == t_high_K) return 0.0;
  const auto& g = cable.geometry;
  double sum = 0.0;
  if (elements.outer) sum += g.outer_area() * conductivity_integral(cable.outer, t_low_K, t_high_K);
  if (elements.dielectric) {
    sum += g.dielectric_area() * conductivity_integral(cable.dielectric, t_low_K, t_high_K);
  }
  if (elements.center) sum += g.center_area() * conductivity_integral(cable.center, t_low_K, t_high_K);
  return sum / length_m;
}

double twisted_pair_load(const TwistedPairSpec& pair, double length_m, double t_low_K,
                         double t_high_K) {
  check_span(length_m, t_low_K, t_high_K);
  if (t_low_K == t_high_K) return 0.0;
  return pair.conductor_area() * conductivity_integral(pair.wire, t_low_K, t_high_K) / length_m;
}

double radiative_load(const ShieldGeometry& g, double t_outer_K, double t_inner_K) {
  if (!(g.emissivity > 0.0 && g.emissivity <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "emissivity must lie in (0, 1]");
  }
  if (!(g.radius_inner_m > 0.0 && g.radius_inner_m < g.radius_outer_m && g.height_m > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "need 0 < r_inner < r_outer and height > 0");
  }
  if (!(t_inner_K >= 0.0) || !(t_outer_K >= t_inner_K)) {
    throw Error(ErrorCode::invalid_argument, "need T_outer >= T_inner >= 0");
  }
  const double a_in = 2.0 * kPi * g.radius_inner_m * g.height_m;
  const double a_out = 2.0 * kPi * g.radius_outer_m * g.height_m;
  const double e = g.emissivity;
  const double t4 = t_outer_K * t_outer_K * t_outer_K * t_outer_K -
                    t_inner_K * t_inner_K * t_inner_K * t_inner_K;
  return kStefanBoltzmann * a_in * t4 / (1.0 / e + (a_in / a_out) * (1.0 / e - 1.0));
}

ThermalizationAssumption ThermalizationAssumption::everywhere(const FridgeModel& fridge) {
  ThermalizationAssumption a;
  a.sunk.assign(fridge.position_count(), {true, true, true});
  return a;
}

ThermalizationAssumption line_assumption(const LineSpec& line, const FridgeModel& fridge,
                                         bool uncertain_sunk) {
  line.check_topology(fridge);
  ThermalizationAssumption a = ThermalizationAssumption::everywhere(fridge);
  const std::size_t start = line.start_position(fridge);
  const std::size_t end = line.end_position(fridge);
  for (std::size_t p = start + 1; p < end; ++p) {
    const std::string& stage = fridge.name_at(p);
    CenterThermalization mode = CenterThermalization::uncertain;
    for (const Component* c : line.components_at(stage)) {
      if (c->sinks_center()) mode = CenterThermalization::always;
    }
    if (auto it = line.center_thermalization.find(stage); it != line.center_thermalization.end()) {
      mode = it->second;
    }
    bool sunk = mode == CenterThermalization::always ||
                (mode == CenterThermalization::uncertain && uncertain_sunk);
    a.sunk[p][kCenter] = sunk;
  }
  // Cable changes are connectorized on a clamped plate.
  for (std::size_t i = 1; i < line.runs.size(); ++i) {
    a.sunk[fridge.position_of(line.runs[i].from)] = {true, true, true};
  }
  return a;
}

std::vector<double> passive_profile(const LineSpec& line, const FridgeModel& fridge,
                                    const Catalog& catalog,
                                    const ThermalizationAssumption& assumption) {
  line.check_topology(fridge);
  if (assumption.sunk.size() != fridge.position_count()) {
    throw Error(ErrorCode::invalid_argument, "thermalization assumption does not match the fridge");
  }
  std::vector<double> out(fridge.stages.size(), 0.0);
  const std::size_t start = line.start_position(fridge);
  const std::size_t end = line.end_position(fridge);

  // Cable occupying the segment that ends at each position.
  std::vector<const CableSpec*> segment(fridge.position_count(), nullptr);
  for (const auto& run : line.runs) {
    const CableSpec& cable = catalog.cable(run.cable);
    for (std::size_t p = fridge.position_of(run.from) + 1; p <= fridge.position_of(run.to); ++p) {
      segment[p] = &cable;
    }
  }

  for (int element : {kOuter, kDielectric, kCenter}) {
    std::size_t last = start;
    double length = 0.0;
    for (std::size_t p = start + 1; p <= end; ++p) {
      length += fridge.length_above(p);
      const bool sunk = p == end || assumption.sunk[p][element];
      if (!sunk) continue;
      ElementSet only{element == kOuter, element == kDielectric, element == kCenter};
      out[p - 1] += conductive_load(*segment[p], length, fridge.temperature_at(p),
                                    fridge.temperature_at(last), only);
      last = p;
      length = 0.0;
    }
  }
  return out;
}

std::vector<Bounds> line_passive_profile(const LineSpec& line, const FridgeModel& fridge,
                                         const Catalog& catalog) {
  const auto full = passive_profile(line, fridge, catalog, line_assumption(line, fridge, true));
  const auto none = passive_profile(line, fridge, catalog, line_assumption(line, fridge, false));
  std::vector<Bounds> out(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    out[i] = {std::min(full[i], none[i]), std::max(full[i], none[i])};
  }
  return out;
}

}  // namespace cryo
