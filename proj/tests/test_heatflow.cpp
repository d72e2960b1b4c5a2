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

#include <cmath>

#include "core/heatflow.hpp"
#include "core/units.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cryo;
using cryo::testing::bundled_catalog;
using cryo::testing::rel_diff;

namespace {

double sum_load(const CableSpec& c, double length, double lo, double hi) {
  const auto& g = c.geometry;
  return (g.outer_area() * conductivity_integral(c.outer, lo, hi) +
          g.dielectric_area() * conductivity_integral(c.dielectric, lo, hi) +
          g.center_area() * conductivity_integral(c.center, lo, hi)) /
         length;
}

}  // namespace

TEST_CASE("conductive load is the area-weighted integral over length") {
  const auto& c = bundled_catalog().cable("UT085-SS-SS");
  CHECK(rel_diff(conductive_load(c, 0.2, 2.85, 35.0), sum_load(c, 0.2, 2.85, 35.0)) < 1e-12);
  CHECK(rel_diff(conductive_load(c, 0.4, 2.85, 35.0), 0.5 * conductive_load(c, 0.2, 2.85, 35.0)) < 1e-12);
  ElementSet outer_only{true, false, false};
  CHECK(conductive_load(c, 0.2, 2.85, 35.0, outer_only) < conductive_load(c, 0.2, 2.85, 35.0));
  CHECK_THROWS_AS(conductive_load(c, 0.0, 1.0, 2.0), Error);
}

TEST_CASE("twisted pair load counts every wire") {
  const auto& tp = bundled_catalog().twisted_pair("PhBr-AWG36");
  const double one = tp.wire.points.empty() ? 0 : conductivity_integral(tp.wire, 4.0, 50.0);
  const double area = 3.14159265358979323846 * 0.25 * tp.wire_diameter_m * tp.wire_diameter_m;
  CHECK(rel_diff(twisted_pair_load(tp, 0.3, 4.0, 50.0), tp.wires_per_pair * area * one / 0.3) < 1e-12);
}

TEST_CASE("radiative load follows the gray-body cylinder formula") {
  ShieldGeometry g{0.2, 0.25, 1.0, 0.05};
  const double sigma = 5.670374419e-8;
  const double a_in = 2 * 3.14159265358979323846 * 0.2 * 1.0;
  const double eps = 1.0 / (1.0 / 0.05 + (0.2 / 0.25) * (1.0 / 0.05 - 1.0));
  const double expected = sigma * a_in * eps * (std::pow(300.0, 4) - std::pow(35.0, 4));
  CHECK(rel_diff(radiative_load(g, 300.0, 35.0), expected) < 1e-9);
  CHECK(radiative_load(g, 35.0, 35.0) == 0.0);
  CHECK(radiative_load(g, 310.0, 35.0) > radiative_load(g, 300.0, 35.0));
  ShieldGeometry g2 = g;
  g2.emissivity = 0.1;
  CHECK(radiative_load(g2, 300.0, 35.0) > radiative_load(g, 300.0, 35.0));
}

TEST_CASE("fully sunk profile equals stage-by-stage conductive loads") {
  const auto f = FridgeModel::reference();
  const auto& c = bundled_catalog().cable("UT085-SS-SS");
  const auto line = make_attenuated_line(f, "UT085-SS-SS", {0, 20, 0, 20, 20});
  const auto prof = passive_profile(line, f, bundled_catalog(), ThermalizationAssumption::everywhere(f));
  for (std::size_t i = 0; i < f.stages.size(); ++i) {
    CAPTURE(i);
    const double expected = conductive_load(c, f.stages[i].cable_length_above_m, f.stages[i].temperature_K,
                                            f.temperature_at(i));
    CHECK(rel_diff(prof[i], expected) < 1e-12);
  }
}

TEST_CASE("unsunk center conductor carries heat to the next sunk stage") {
  const auto f = FridgeModel::reference();
  const auto& c = bundled_catalog().cable("UT085-SS-SS");
  const auto line = make_attenuated_line(f, "UT085-SS-SS", {0, 20, 0, 20, 20});
  auto a = ThermalizationAssumption::everywhere(f);
  a.sunk[3][kCenter] = false;  // Still
  const auto prof = passive_profile(line, f, bundled_catalog(), a);
  ElementSet center{false, false, true};
  ElementSet rest{true, true, false};
  const double l_cp = f.stages[2].cable_length_above_m + f.stages[3].cable_length_above_m;
  CHECK(rel_diff(prof[3], conductive_load(c, l_cp, f.stages[3].temperature_K, f.stages[1].temperature_K, center) +
                              conductive_load(c, f.stages[3].cable_length_above_m, f.stages[3].temperature_K,
                                              f.stages[2].temperature_K, rest)) < 1e-12);
  CHECK(rel_diff(prof[2], conductive_load(c, f.stages[2].cable_length_above_m, f.stages[2].temperature_K,
                                          f.stages[1].temperature_K, rest)) < 1e-12);
}

TEST_CASE("bounds are ordered and collapse when every stage has an attenuator") {
  const auto f = FridgeModel::reference();
  const auto drive = make_attenuated_line(f, "UT085-SS-SS", {0, 20, 0, 20, 20});
  for (const auto& b : line_passive_profile(drive, f, bundled_catalog())) CHECK(b.low <= b.high);
  const auto full = make_attenuated_line(f, "UT085-SS-SS", {3, 10, 3, 20, 20});
  for (const auto& b : line_passive_profile(full, f, bundled_catalog())) CHECK(b.low == b.high);
}

TEST_CASE("conductive loads scale with the square of the diameter") {
  const auto f = FridgeModel::reference();
  const double s = 0.047 / 0.085;
  Catalog scaled = bundled_catalog();
  scaled.add_cable(bundled_catalog().cable("UT085-SS-SS").scaled(s));
  const auto line = make_attenuated_line(f, "UT085-SS-SS", {0, 20, 0, 20, 20});
  const auto a = line_passive_profile(line, f, bundled_catalog());
  const auto b = line_passive_profile(line, f, scaled);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(rel_diff(b[i].low, a[i].low * s * s) < 1e-9);
    CHECK(rel_diff(b[i].high, a[i].high * s * s) < 1e-9);
  }
}

TEST_CASE("output line that ends at 4K loads only 50K and 4K") {
  const auto f = FridgeModel::reference();
  LineSpec l;
  l.kind = LineKind::output_ss;
  l.runs = {{"UT085-SS-SS", "RT", "4K"}};
  const auto b = line_passive_profile(l, f, bundled_catalog());
  CHECK(b[0].low > 0);
  CHECK(b[1].low > 0);
  CHECK(b[2].high == 0);
  CHECK(b[4].high == 0);
}

TEST_CASE("dangling or inverted lines are topology errors") {
  const auto f = FridgeModel::reference();
  LineSpec l;
  l.kind = LineKind::drive;
  l.runs = {{"UT085-SS-SS", "RT", "CP"}};
  CHECK_THROWS_AS(line_passive_profile(l, f, bundled_catalog()), Error);
  l.runs = {{"UT085-SS-SS", "MXC", "RT"}};
  CHECK_THROWS_AS(l.check_topology(f), Error);
  l.runs = {{"UT085-SS-SS", "RT", "4K"}, {"UT085-NbTi", "Still", "MXC"}};
  CHECK_THROWS_AS(l.check_topology(f), Error);
}
