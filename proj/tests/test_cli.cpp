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

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("cryobudget_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const auto out = scratch() / "stdout";
  const auto err = scratch() / "stderr";
  const std::string cmd = std::string("'") + CRYOBUDGET_CLI + "' " + args + " >'" + out.string() + "' 2>'" +
                          err.string() + "'";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

bool error_is_json(const std::string& err) {
  try {
    return nlohmann::json::parse(err.substr(0, err.find('\n'))).contains("error");
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

TEST_CASE("noise command prints the C1 occupation") {
  const auto r = run("noise --config C1");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["n_mxc"].get<double>() == doctest::Approx(0.0011564).epsilon(1e-3));
}

TEST_CASE("custom configuration and unchanged input") {
  const auto r = run("noise --config custom --atten 0,0,0,0,0 --n-input 2.5");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["n_mxc"].get<double>() == 2.5);
}

TEST_CASE("artifacts are written and byte-identical across runs") {
  const auto a = scratch() / "a";
  const auto b = scratch() / "b";
  REQUIRE(run("budget --preset fig9 --out '" + a.string() + "'").code == 0);
  REQUIRE(run("budget --preset fig9 --out '" + b.string() + "'").code == 0);
  for (const char* name : {"fig9.csv", "fig5.csv", "budget.json"}) {
    CAPTURE(name);
    REQUIRE(fs::exists(a / name));
    CHECK(slurp(a / name) == slurp(b / name));
  }
  const auto csv = slurp(a / "fig9.csv");
  CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("passive table for a config file") {
  const auto cfg = write("two.json", R"({"schema_version": 1, "inventory": [
    {"name": "drive", "kind": "drive", "count": 2,
     "runs": [{"cable": "UT085-SS-SS", "from": "RT", "to": "MXC"}],
     "components": [{"kind": "attenuator", "stage": "4K", "attenuation_dB": 20}]}]})");
  const auto r = run("passive '" + cfg.string() + "' --bounds --print passive.csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("line,kind,count,stage,predicted_low_W,predicted_high_W,predicted_mid_W,measured_W\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
}

TEST_CASE("empty inventory is a successful empty table") {
  const auto cfg = write("empty.json", R"({"schema_version": 1, "inventory": []})");
  const auto r = run("passive '" + cfg.string() + "' --print passive.csv");
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
}

TEST_CASE("schema violations exit 1 with a JSON diagnostic") {
  const auto cfg = write("bad.json", R"({"schema_version": 1, "fridge": "imaginary"})");
  const auto r = run("budget '" + cfg.string() + "'");
  CHECK(r.code == 1);
  CHECK(error_is_json(r.err));
  CHECK(r.err.find("fridge") != std::string::npos);
  const auto syntax = write("syntax.json", "{\n\"schema_version\": 1,\n\"qubits\": }\n");
  const auto s = run("budget '" + syntax.string() + "'");
  CHECK(s.code == 1);
  CHECK(s.err.find("line 3") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("").code == 1);
  CHECK(run("teleport").code == 1);
  CHECK(run("noise --config C9").code == 1);
  CHECK(run("budget --preset nope").code == 1);
  const auto r = run("optimize --max-fraction CP");
  CHECK(r.code == 1);
  CHECK(error_is_json(r.err));
}

TEST_CASE("computation errors exit 2") {
  const auto csv = write("flat.csv", "current_A,load_MXC_W\n1e-4,1e-9\n1e-4,1e-9\n1e-4,1e-9\n");
  const auto r = run("fit --kind resistance '" + csv.string() + "'");
  CHECK(r.code == 2);
  CHECK(error_is_json(r.err));
  const auto o = run("noise --freq 1e12 --with-cable-loss");
  CHECK(o.code == 2);
}

TEST_CASE("infeasible optimization exits 0 with a notice") {
  const auto r = run("optimize --max-fraction MXC=1e-12 --print ranked.csv");
  CHECK(r.code == 0);
  CHECK(r.err.find("notice") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
}

TEST_CASE("fit recovers the effective resistance from a quadratic sweep") {
  const auto csv = write("r.csv", "current_A,load_MXC_W\n2e-4,6e-9\n4e-4,2.4e-8\n6e-4,5.4e-8\n8e-4,9.6e-8\n1e-3,1.5e-7\n");
  const auto r = run("fit --kind resistance '" + csv.string() + "'");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["fits"][0]["r_eff_ohm"].get<double>() == doctest::Approx(0.15).epsilon(1e-9));
}

TEST_CASE("malformed measurement CSV names the line") {
  const auto csv = write("m.csv", "# heated_stage=CP\napplied_power_W,T_50K,T_4K,T_Still,T_CP,T_MXC\n0,35,2.85,0.882,0.082\n");
  const auto r = run("fit '" + csv.string() + "'");
  CHECK(r.code == 1);
  CHECK(r.err.find("m.csv:3") != std::string::npos);
}

TEST_CASE("sweep and optimize produce ranked tables") {
  const auto s = run("sweep --stage CP --from 0 --to 30 --step 10 --print sweep.csv");
  REQUIRE(s.code == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 5);
  const auto o = run("optimize --allowed 0,10,20,30 --max-fraction Still=0.01 --max-fraction CP=0.05 "
                     "--max-fraction MXC=0.01 --print ranked.csv");
  REQUIRE(o.code == 0);
  CHECK(o.out.find("\n1,") != std::string::npos);
}
