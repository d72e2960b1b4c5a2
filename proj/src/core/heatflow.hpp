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

#ifndef CRYOBUDGET_CORE_HEATFLOW_HPP
#define CRYOBUDGET_CORE_HEATFLOW_HPP

#include <array>
#include <vector>

#include "core/materials.hpp"
#include "core/model.hpp"

namespace cryo {

struct ElementSet {
  bool outer = true;
  bool dielectric = true;
  bool center = true;

  static ElementSet all() { return {}; }
};

/// Heat conducted by `length_m` of coax between two temperatures, summed
/// over the selected elements: sum_x A_x * int rho_x dT / L.
double conductive_load(const CableSpec& cable, double length_m, double t_low_K, double t_high_K,
                       ElementSet elements = ElementSet::all());

double twisted_pair_load(const TwistedPairSpec& pair, double length_m, double t_low_K,
                         double t_high_K);

/// Gray-body exchange between concentric cylinders, inner surface at T_inner.
double radiative_load(const ShieldGeometry& geometry, double t_outer_K, double t_inner_K);

enum CableElement { kOuter = 0, kDielectric = 1, kCenter = 2 };

/// Which cable elements are heat-sunk at each position of the chain.
struct ThermalizationAssumption {
  std::vector<std::array<bool, 3>> sunk;  // indexed by position

  static ThermalizationAssumption everywhere(const FridgeModel& fridge);
};

/// Assumption for a line with every "uncertain" center-conductor stage
/// resolved to `uncertain_sunk`. Outer conductor and dielectric are sunk at
/// every stage; run boundaries and the line end sink everything.
ThermalizationAssumption line_assumption(const LineSpec& line, const FridgeModel& fridge,
                                         bool uncertain_sunk);

/// Passive load per stage (indexed by stage) for one line.
std::vector<double> passive_profile(const LineSpec& line, const FridgeModel& fridge,
                                    const Catalog& catalog,
                                    const ThermalizationAssumption& assumption);

struct Bounds {
  double low = 0;
  double high = 0;

  double mid() const { return 0.5 * (low + high); }
};

/// Per-stage [lower, upper] passive load of a single line: the two extreme
/// thermalization scenarios, taken stage by stage.
std::vector<Bounds> line_passive_profile(const LineSpec& line, const FridgeModel& fridge,
                                         const Catalog& catalog);

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_HEATFLOW_HPP
