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

#ifndef CRYOBUDGET_TESTS_SUPPORT_HPP
#define CRYOBUDGET_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/materials.hpp"

namespace cryo::testing {

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline const Catalog& bundled_catalog() {
  static const Catalog catalog = Catalog::load_file(default_data_dir() + "/catalog.json");
  return catalog;
}

inline std::string preset_path(const std::string& name) {
  return default_data_dir() + "/presets/" + name + ".json";
}

inline ProjectConfig preset(const std::string& name) { return load_project_config(preset_path(name)); }

inline const LineSpec& line_named(const ProjectConfig& cfg, const std::string& name) {
  for (const auto& l : cfg.inventory) {
    if (l.name == name) return l;
  }
  throw Error(ErrorCode::lookup, "test preset has no line " + name);
}

// Deterministic generator shared by the property suites.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(integer(0, static_cast<int>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cryo::testing

#endif  // CRYOBUDGET_TESTS_SUPPORT_HPP
