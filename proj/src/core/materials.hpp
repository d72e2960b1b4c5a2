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

#ifndef CRYOBUDGET_CORE_MATERIALS_HPP
#define CRYOBUDGET_CORE_MATERIALS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cryo {

enum class Extrapolation { linear_to_zero, forbidden };

/// Tabulated thermal conductivity curve. Between samples the curve is
/// interpolated log-log; below the first sample it either falls linearly to
/// zero at 0 K or is rejected. Above the last sample it is always rejected.
struct Material {
  std::string name;
  std::vector<std::pair<double, double>> points;  // (K, W m^-1 K^-1)
  Extrapolation extrapolation = Extrapolation::linear_to_zero;

  double t_min() const { return points.front().first; }
  double t_max() const { return points.back().first; }

  // Throws Error(invalid_argument) unless temperatures strictly increase and
  // conductivities are positive.
  void validate() const;
};

double conductivity(const Material& material, double temperature_K);

/// Integral of the conductivity over [t_low, t_high] in W/m, evaluated with
/// adaptive Gauss-Kronrod quadrature on each interpolation interval.
double conductivity_integral(const Material& material, double t_low_K, double t_high_K);

struct CableGeometry {
  double center_diameter_m = 0;
  double dielectric_diameter_m = 0;
  double shield_diameter_m = 0;

  double center_area() const;
  double dielectric_area() const;
  double outer_area() const;
};

struct CableSpec {
  std::string name;
  CableGeometry geometry;
  Material center;
  Material dielectric;
  Material outer;
  std::vector<std::pair<double, double>> attenuation_curve;  // (Hz, dB/m) at 300 K
  double cryo_attenuation_scale = 8.2 / 9.7;
  double dc_resistance_ohm_per_m = 0;
  // Set for superconducting conductors: no RF loss when cold.
  std::optional<double> superconducting_transition_K;

  void validate() const;

  /// Same cable with every diameter multiplied by `scale`. Cross sections go
  /// as scale^2, attenuation per metre as 1/scale and DC resistance as
  /// 1/scale^2.
  CableSpec scaled(double scale) const;
};

/// Attenuation of `length_m` of cable in dB. `cryogenic` selects the
/// below-4 K attenuation (room-temperature curve times cryo scale, or zero
/// for superconducting cables).
double cable_attenuation_db(const CableSpec& cable, double frequency_Hz, double length_m,
                            bool cryogenic);

struct TwistedPairSpec {
  std::string name;
  Material wire;
  double wire_diameter_m = 0;
  int wires_per_pair = 2;

  double conductor_area() const;
};

/// Immutable material/cable/twisted-pair database.
class Catalog {
 public:
  // Parses the catalog JSON document; `origin` names it in diagnostics.
  static Catalog parse(const std::string& text, const std::string& origin = "<catalog>");
  static Catalog load_file(const std::string& path);

  const Material& material(const std::string& name) const;
  const CableSpec& cable(const std::string& name) const;
  const TwistedPairSpec& twisted_pair(const std::string& name) const;

  std::vector<std::string> material_names() const;
  std::vector<std::string> cable_names() const;

  void add_material(Material m);
  void add_cable(CableSpec c);
  void add_twisted_pair(TwistedPairSpec t);

 private:
  std::map<std::string, Material> materials_;
  std::map<std::string, CableSpec> cables_;
  std::map<std::string, TwistedPairSpec> twisted_pairs_;
};

/// Directory holding catalog.json and presets/. Honors CRYOBUDGET_DATA_DIR.
std::string default_data_dir();

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_MATERIALS_HPP
