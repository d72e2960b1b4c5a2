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

#include "core/budget.hpp"
#include "core/units.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cryo;
using cryo::testing::bundled_catalog;
using cryo::testing::rel_diff;

namespace {

BudgetInput small_input() {
  BudgetInput in;
  in.fridge = FridgeModel::reference();
  in.inventory.push_back(make_attenuated_line(in.fridge, "UT085-SS-SS", {0, 20, 0, 20, 20}));
  in.inventory.back().count = 12;
  auto flux = make_attenuated_line(in.fridge, "UT085-SS-SS", {0, 20, 0, 0, 0}, LineKind::flux);
  flux.name = "flux";
  flux.count = 7;
  in.inventory.push_back(flux);
  auto pump = make_attenuated_line(in.fridge, "UT085-SS-SS", {0, 20, 0, 10, 0}, LineKind::pump);
  pump.name = "pump";
  pump.count = 3;
  in.inventory.push_back(pump);
  return in;
}

void check_reports_equal(const BudgetReport& a, const BudgetReport& b, double tol) {
  REQUIRE(a.stages.size() == b.stages.size());
  for (std::size_t i = 0; i < a.stages.size(); ++i) {
    CAPTURE(a.stages[i].stage);
    CHECK(rel_diff(a.stages[i].passive_W, b.stages[i].passive_W) <= tol);
    CHECK(rel_diff(a.stages[i].active_W, b.stages[i].active_W) <= tol);
    CHECK(rel_diff(a.stages[i].radiative_W, b.stages[i].radiative_W) <= tol);
    CHECK(rel_diff(a.stages[i].total_W, b.stages[i].total_W) <= tol);
    CHECK(rel_diff(a.stages[i].fraction, b.stages[i].fraction) <= tol);
    CHECK(rel_diff(a.stages[i].passive_bounds_W.low, b.stages[i].passive_bounds_W.low) <= tol);
    CHECK(rel_diff(a.stages[i].passive_bounds_W.high, b.stages[i].passive_bounds_W.high) <= tol);
  }
  CHECK(a.n_mxc.has_value() == b.n_mxc.has_value());
  if (a.n_mxc && b.n_mxc) CHECK(rel_diff(*a.n_mxc, *b.n_mxc) <= tol);
}

}  // namespace

TEST_CASE("lossless active loads follow the attenuator ladder") {
  const auto f = FridgeModel::reference();
  const auto line = make_attenuated_line(f, "UT085-SS-SS", {0, 20, 0, 20, 20});
  const auto a = active_loads_per_stage(line, 10e-3, 1e7, f, bundled_catalog(), false);
  CHECK(a.stage_W[0] == 0.0);
  CHECK(rel_diff(a.stage_W[1], 0.99 * 10e-3) < 1e-12);
  CHECK(a.stage_W[2] == 0.0);
  CHECK(rel_diff(a.stage_W[3], 0.99 * 100e-6) < 1e-12);
  CHECK(rel_diff(a.stage_W[4], 0.99 * 1e-6) < 1e-12);
  CHECK(rel_diff(a.delivered_W, 1e-8) < 1e-12);
  CHECK(a.rt_W == 0.0);
}

TEST_CASE("cable loss is split between the stages at either end") {
  const auto f = FridgeModel::reference();
  const auto line = make_attenuated_line(f, "UT085-SS-SS", {0, 0, 0, 0, 0});
  const auto a = active_loads_per_stage(line, 1e-3, 6e9, f, bundled_catalog(), true);
  // With no attenuators all dissipation is cable loss; the first run puts
  // half of its loss at RT.
  const auto& c = bundled_catalog().cable("UT085-SS-SS");
  const double first = 1e-3 * (1 - 1 / db_to_ratio(cable_attenuation_db(c, 6e9, 0.20, false)));
  CHECK(rel_diff(a.rt_W, first / 2) < 1e-12);
  CHECK(a.stage_W[0] > first / 2);
}

TEST_CASE("line attenuation adds discrete and cable dB") {
  const auto f = FridgeModel::reference();
  const auto line = make_attenuated_line(f, "UT085-SS-SS", {0, 20, 0, 20, 20});
  CHECK(line_attenuation_db(line, f, bundled_catalog(), 6e9, false) == doctest::Approx(60.0));
  CHECK(line_attenuation_db(line, f, bundled_catalog(), 6e9, true) > 60.0);
}

TEST_CASE("mixing chamber cooling power is quadratic in temperature and linear in flow") {
  const auto f = FridgeModel::reference();
  CHECK(rel_diff(cooling_power_mxc(f, 0.020), 13e-6) < 1e-12);
  CHECK(rel_diff(cooling_power_mxc(f, 0.040), 4 * 13e-6) < 1e-12);
  CHECK(rel_diff(cooling_power_mxc(f, 0.020, 1.38e-3), 26e-6) < 1e-12);
}

TEST_CASE("budget is additive over inventory partitions") {
  const BudgetInput in = small_input();
  BudgetInput split = in;
  split.inventory.clear();
  for (const auto& l : in.inventory) {
    LineSpec a = l;
    LineSpec b = l;
    a.count = l.count / 2;
    b.count = l.count - a.count;
    split.inventory.push_back(a);
    split.inventory.push_back(b);
  }
  check_reports_equal(total_budget(in, bundled_catalog()), total_budget(split, bundled_catalog()), 1e-12);
}

TEST_CASE("identity scenario leaves the report unchanged") {
  const BudgetInput in = small_input();
  const auto base = total_budget(in, bundled_catalog());
  const auto res = scale_scenario(in, bundled_catalog(), ScaleOptions{});
  check_reports_equal(base, res.report, 0.0);
  CHECK(res.max_qubits == max_qubit_estimate(base, in.qubits));
}

TEST_CASE("fractions do not change when loads and cooling scale together") {
  BudgetInput in = small_input();
  in.plan.passive_source = PassiveSource::measured;
  in.plan.still_absorption = false;
  for (auto& l : in.inventory) {
    for (const auto& s : in.fridge.stages) l.measured_passive_W[s.name] = 1e-7 * s.cooling_power_W;
  }
  const auto base = total_budget(in, bundled_catalog());
  const double k = 3.7;
  BudgetInput scaled = in;
  for (auto& s : scaled.fridge.stages) s.cooling_power_W *= k;
  for (auto& l : scaled.inventory) {
    for (auto& [stage, w] : l.measured_passive_W) w *= k;
  }
  scaled.plan.drive_target_dBm += ratio_to_db(k);
  scaled.plan.pump_target_dBm += ratio_to_db(k);
  scaled.plan.flux.r_eff_cp_ohm *= k;
  scaled.plan.flux.r_eff_mxc_ohm *= k;
  const auto after = total_budget(scaled, bundled_catalog());
  for (std::size_t i = 0; i < base.stages.size(); ++i) {
    CHECK(rel_diff(base.stages[i].fraction, after.stages[i].fraction) < 1e-12);
  }
}

TEST_CASE("still absorption moves load without creating it") {
  BudgetInput in = small_input();
  in.plan.still_absorption = false;
  const auto off = total_budget(in, bundled_catalog());
  in.plan.still_absorption = true;
  const auto on = total_budget(in, bundled_catalog());
  double sum_off = 0, sum_on = 0;
  for (std::size_t i = 0; i < off.stages.size(); ++i) {
    sum_off += off.stages[i].active_W;
    sum_on += on.stages[i].active_W;
  }
  CHECK(rel_diff(sum_on, sum_off) < 1e-12);
  CHECK(rel_diff(on.stage("Still").active_W - off.stage("Still").active_W,
                 0.004 * off.stage("4K").active_W) < 1e-9);
}

TEST_CASE("radiation counted in the cooling spec is reported but not added") {
  BudgetInput in = small_input();
  in.radiation.push_back({"RT", "50K", {0.45, 0.5, 1.2, 0.06}, true});
  const auto r = total_budget(in, bundled_catalog());
  CHECK(r.stage("50K").radiative_W == 0.0);
  CHECK(r.stage("50K").radiative_reported_W > 10.0);
  in.radiation.back().counted_in_cooling_spec = false;
  const auto r2 = total_budget(in, bundled_catalog());
  CHECK(rel_diff(r2.stage("50K").total_W - r.stage("50K").total_W, r.stage("50K").radiative_reported_W) < 1e-9);
}

TEST_CASE("measured passive loads override predictions stage by stage") {
  BudgetInput in = small_input();
  in.inventory.resize(1);
  in.inventory[0].measured_passive_W["MXC"] = 2e-8;
  in.plan.passive_source = PassiveSource::measured;
  const auto r = total_budget(in, bundled_catalog());
  CHECK(rel_diff(r.stage("MXC").passive_W, 12 * 2e-8) < 1e-12);
  CHECK(rel_diff(r.stage("CP").passive_W, r.stage("CP").passive_bounds_W.mid()) < 1e-12);
  in.inventory[0].measured_passive_W["Nowhere"] = 1.0;
  CHECK_THROWS_AS(total_budget(in, bundled_catalog()), Error);
}

TEST_CASE("empty inventory gives zero loads") {
  BudgetInput in;
  in.fridge = FridgeModel::reference();
  const auto r = total_budget(in, bundled_catalog());
  for (const auto& s : r.stages) CHECK(s.total_W == 0.0);
  CHECK_FALSE(r.n_mxc.has_value());
}

TEST_CASE("temperature prediction adds self and cross response") {
  BudgetInput in = small_input();
  in.fridge.response = ResponseCoefficients{{1.0, 0.7, 0.034, 3.75e-3, 6.1e-4}, {0, 0, 0, 0, 6.67}, {}, {}, {}};
  const auto r = total_budget(in, bundled_catalog());
  REQUIRE(r.predicted_temperatures_K.has_value());
  const auto& t = *r.predicted_temperatures_K;
  const double expected = 0.006 + r.stage("MXC").total_W / 6.1e-4 + 6.67 * r.stage("CP").total_W;
  CHECK(rel_diff(t[4], expected) < 1e-12);
}

TEST_CASE("scaling reduces every conductive load by the squared diameter ratio") {
  BudgetInput in = small_input();
  in.plan.passive_source = PassiveSource::predicted;
  ScaleOptions o;
  o.diameter_scale = 0.5;
  const auto base = total_budget(in, bundled_catalog());
  const auto res = scale_scenario(in, bundled_catalog(), o);
  for (std::size_t i = 0; i < base.stages.size(); ++i) {
    CHECK(rel_diff(res.report.stages[i].passive_W, 0.25 * base.stages[i].passive_W) < 1e-9);
  }
}

TEST_CASE("qubit estimate divides by the worst fraction") {
  BudgetReport r;
  r.stages.resize(2);
  r.stages[0].fraction = 0.1;
  r.stages[1].fraction = 0.25;
  CHECK(max_qubit_estimate(r, 50) == 200);
}
