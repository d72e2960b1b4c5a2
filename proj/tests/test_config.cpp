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

#include <map>
#include <string>

#include "core/commands.hpp"
#include "core/config.hpp"
#include "core/report.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace cryo;
using cryo::testing::preset;

namespace {

ProjectConfig parse(const std::string& text) { return parse_project_config(text, "p.json", "."); }

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal config uses the reference fridge and built-in configurations") {
  const auto cfg = parse(R"({"schema_version": 1})");
  CHECK(cfg.fridge == FridgeModel::reference());
  CHECK(cfg.inventory.empty());
  CHECK(cfg.noise.configurations.at("C4") == std::vector<double>{0, 20, 10, 10, 20});
}

TEST_CASE("schema version is required and checked") {
  CHECK(error_of("{}").find("schema_version") != std::string::npos);
  CHECK(error_of(R"({"schema_version": 2})").find("unsupported") != std::string::npos);
}

TEST_CASE("unknown keys are rejected with their path") {
  CHECK(error_of(R"({"schema_version": 1, "fridge": {"stages": [], "colour": 1}})").find("fridge.colour") !=
        std::string::npos);
  const std::string line_err = error_of(R"({"schema_version": 1, "inventory": [
      {"name": "d", "kind": "drive", "runs": [{"cable": "UT085-SS-SS", "from": "RT", "to": "MXC", "len": 1}]}]})");
  CHECK(line_err.find("inventory[0].runs[0].len") != std::string::npos);
}

TEST_CASE("syntax errors carry a line number") {
  const std::string e = error_of("{\n  \"schema_version\": 1,\n  \"qubits\": ,\n}");
  CHECK(e.find("line 3") != std::string::npos);
}

TEST_CASE("invalid values are reported at their path") {
  CHECK(error_of(R"({"schema_version": 1, "inventory": [{"name": "d", "kind": "laser", "runs": []}]})")
            .find("inventory[0].kind") != std::string::npos);
  CHECK(error_of(R"({"schema_version": 1, "signal_plan": {"passive_source": "guessed"}})")
            .find("signal_plan.passive_source") != std::string::npos);
  CHECK(error_of(R"({"schema_version": 1, "inventory": [{"name": "d", "kind": "drive", "runs": [
      {"cable": "UT085-SS-SS", "from": "RT", "to": "CP"}]}]})")
            .find("inventory[0]") != std::string::npos);
}

TEST_CASE("cooling reference point sets the MXC coefficient") {
  const auto cfg = parse(R"({"schema_version": 1, "fridge": {
      "stages": [{"name": "MXC", "temperature_K": 0.01, "cooling_power_W": 1e-5, "cable_length_above_m": 0.3}],
      "mxc_cooling_reference": {"flow_mol_per_s": 1e-3, "temperature_K": 0.02, "power_W": 2e-5}}})");
  CHECK(cfg.fridge.mxc_cooling_coefficient == doctest::Approx(2e-5 / (1e-3 * 4e-4)));
}

TEST_CASE("bundled presets load and validate") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    CHECK_NOTHROW(open_preset(name));
  }
  CHECK_THROWS_AS(open_preset("nonexistent"), Error);
  CHECK_THROWS_AS(open_preset("../catalog"), Error);
}

TEST_CASE("fig9 preset carries the 124-line inventory") {
  const auto cfg = preset("fig9");
  // Each output line is listed twice: steel above 4K, NbTi below.
  std::map<LineKind, int> by_kind;
  for (const auto& l : cfg.inventory) by_kind[l.kind] += l.count;
  CHECK(by_kind[LineKind::drive] == 50);
  CHECK(by_kind[LineKind::flux] == 50);
  CHECK(by_kind[LineKind::readin] == 8);
  CHECK(by_kind[LineKind::pump] == 8);
  CHECK(by_kind[LineKind::output_ss] == 8);
  CHECK(by_kind[LineKind::output_nbti] == 8);
  int physical = 0;
  for (const auto& [kind, n] : by_kind) physical += kind == LineKind::output_ss ? 0 : n;
  CHECK(physical == 124);
  CHECK(cfg.plan.passive_source == PassiveSource::measured);
}

TEST_CASE("cable overrides replace catalog geometry") {
  const auto cfg = parse(R"({"schema_version": 1, "cable_overrides": [
      {"name": "UT085-SS-SS", "shield_diameter_m": 0.003}]})");
  const auto cat = load_project_catalog(cfg);
  CHECK(cat.cable("UT085-SS-SS").geometry.shield_diameter_m == 0.003);
  CHECK_THROWS_AS(load_project_catalog(parse(R"({"schema_version": 1, "cable_overrides": [{"name": "nope"}]})")),
                  Error);
}

TEST_CASE("number formatting is locale free and round-trips") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1e-9) == "1e-09");
  const double x = 0.00227709175668;
  CHECK(parse_csv_number(format_number(x), "t") == doctest::Approx(x).epsilon(1e-12));
}

TEST_CASE("CSV quoting follows RFC 4180") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CsvWriter w({"a", "b"});
  w.row({"1", "x,y"});
  CHECK(w.str() == "a,b\n1,\"x,y\"\n");
  CHECK_THROWS_AS(w.row({"only one"}), Error);
  const auto fields = split_csv_record("1,\"x,y\",\"q\"\"q\"", "t");
  REQUIRE(fields.size() == 3);
  CHECK(fields[1] == "x,y");
  CHECK(fields[2] == "q\"q");
}

TEST_CASE("commands are deterministic") {
  const auto p = open_preset("fig9");
  const auto a = run_budget(p);
  const auto b = run_budget(p);
  REQUIRE(a.artifacts.size() == b.artifacts.size());
  for (std::size_t k = 0; k < a.artifacts.size(); ++k) CHECK(a.artifacts[k].second == b.artifacts[k].second);
  const auto n1 = run_noise(p, NoiseOptions{});
  const auto n2 = run_noise(p, NoiseOptions{});
  CHECK(n1.artifacts == n2.artifacts);
}

TEST_CASE("passive command on an empty inventory yields a header-only table") {
  const auto r = run_passive(open_default_project(), PassiveOptions{});
  CHECK(r.artifacts.front().first == "passive.csv");
  CHECK(r.artifacts.front().second ==
        "line,kind,count,stage,predicted_low_W,predicted_high_W,predicted_mid_W,measured_W\n");
  CHECK_FALSE(r.notices.empty());
  PassiveOptions narrow;
  narrow.bounds = false;
  CHECK(run_passive(open_default_project(), narrow).artifacts.front().second ==
        "line,kind,count,stage,predicted_mid_W,measured_W\n");
}

TEST_CASE("optimize reports infeasible constraints as a notice") {
  OptimizeOptions o;
  o.max_fraction["MXC"] = 1e-12;
  const auto r = run_optimize(open_default_project(), o);
  REQUIRE(r.notices.size() == 1);
  CHECK(r.artifacts.front().second.find('\n') == r.artifacts.front().second.size() - 1);
}

TEST_CASE("option parsers reject unknown keys") {
  CHECK_THROWS_AS(parse_noise_options(R"({"frequency": 6e9})"), Error);
  CHECK(parse_noise_options(R"({"configuration": "custom", "attenuation_dB": [0, 0, 20, 20, 20]})").custom_dB.size() == 5);
  CHECK(parse_optimize_options(R"({"max_fraction": {"CP": 0.3}, "count_penalty": true})").count_penalty == true);
  CHECK_THROWS_AS(parse_optimize_options(R"({"max_fraction": {"CP": "a lot"}})"), Error);
  CHECK(parse_sweep_options("").stage == "4K");
  CHECK(parse_fit_options(R"({"kind": "resistance"})").kind == "resistance");
}

TEST_CASE("budget summary reports the pulse formula next to the quoted peak") {
  const auto r = run_budget(open_preset("fig9"));
  const auto j = nlohmann::json::parse(r.summary);
  const auto& p = j.at("drive_pulse");
  CHECK(p.at("peak_dBm").get<double>() == doctest::Approx(-75.85).epsilon(1e-3));
  CHECK(p.at("quoted_peak_dBm").get<double>() == -66.0);
  CHECK(p.at("peak_discrepancy_dB").get<double>() == doctest::Approx(9.85).epsilon(1e-2));
}
