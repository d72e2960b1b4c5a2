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

#include "core/materials.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "core/errors.hpp"
#include "core/json_reader.hpp"
#include "core/units.hpp"

namespace cryo {

namespace {

std::string fmt_num(double v) {
  std::ostringstream ss;
  ss.precision(6);
  ss << v;
  return ss.str();
}

// Index i with points[i].first <= t <= points[i+1].first.
std::size_t bracket(const std::vector<std::pair<double, double>>& pts, double t) {
  auto it = std::upper_bound(pts.begin(), pts.end(), t,
                             [](double v, const auto& p) { return v < p.first; });
  std::size_t hi = static_cast<std::size_t>(it - pts.begin());
  if (hi == 0) return 0;
  if (hi >= pts.size()) return pts.size() - 2;
  return hi - 1;
}

}  // namespace

void Material::validate() const {
  if (points.size() < 2) {
    throw Error(ErrorCode::invalid_argument, "material '" + name + "' needs at least two points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].first > 0.0) || !(points[i].second > 0.0)) {
      throw Error(ErrorCode::invalid_argument,
                  "material '" + name + "': temperatures and conductivities must be positive");
    }
    if (i > 0 && !(points[i].first > points[i - 1].first)) {
      throw Error(ErrorCode::invalid_argument,
                  "material '" + name + "': temperatures must be strictly increasing");
    }
  }
}

double conductivity(const Material& material, double temperature_K) {
  const auto& pts = material.points;
  if (!(temperature_K >= 0.0)) {
    throw Error(ErrorCode::range, "negative temperature " + fmt_num(temperature_K) + " K");
  }
  if (temperature_K > material.t_max()) {
    throw Error(ErrorCode::range, "material '" + material.name + "' has no data above " +
                                      fmt_num(material.t_max()) + " K (requested " +
                                      fmt_num(temperature_K) + " K)");
  }
  if (temperature_K < material.t_min()) {
    if (material.extrapolation == Extrapolation::forbidden) {
      throw Error(ErrorCode::range, "material '" + material.name + "' has no data below " +
                                        fmt_num(material.t_min()) + " K");
    }
    return pts.front().second * temperature_K / pts.front().first;
  }
  const std::size_t i = bracket(pts, temperature_K);
  const auto& [t0, k0] = pts[i];
  const auto& [t1, k1] = pts[i + 1];
  if (temperature_K == t0) return k0;
  if (temperature_K == t1) return k1;
  const double w = std::log(temperature_K / t0) / std::log(t1 / t0);
  return std::exp(std::log(k0) + w * std::log(k1 / k0));
}

double conductivity_integral(const Material& material, double t_low_K, double t_high_K) {
  if (!(t_low_K >= 0.0) || !(t_high_K >= t_low_K)) {
    throw Error(ErrorCode::invalid_argument, "conductivity integral needs 0 <= T_low <= T_high (got " +
                                                 fmt_num(t_low_K) + ", " + fmt_num(t_high_K) + ")");
  }
  if (t_low_K == t_high_K) return 0.0;
  // Range checks happen up front so errors are not swallowed by the integrator.
  conductivity(material, t_low_K);
  conductivity(material, t_high_K);

  std::vector<double> cuts{t_low_K};
  for (const auto& p : material.points) {
    if (p.first > t_low_K && p.first < t_high_K) cuts.push_back(p.first);
  }
  cuts.push_back(t_high_K);

  using boost::math::quadrature::gauss_kronrod;
  auto f = [&material](double t) { return conductivity(material, t); };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double err = 0.0;
    total += gauss_kronrod<double, 15>::integrate(f, cuts[i], cuts[i + 1], 12, 1e-12, &err);
  }
  return total;
}

double CableGeometry::center_area() const {
  return kPi * center_diameter_m * center_diameter_m / 4.0;
}
double CableGeometry::dielectric_area() const {
  return kPi * (dielectric_diameter_m * dielectric_diameter_m - center_diameter_m * center_diameter_m) /
         4.0;
}
double CableGeometry::outer_area() const {
  return kPi * (shield_diameter_m * shield_diameter_m - dielectric_diameter_m * dielectric_diameter_m) /
         4.0;
}

void CableSpec::validate() const {
  const auto& g = geometry;
  if (!(g.center_diameter_m > 0.0 && g.center_diameter_m < g.dielectric_diameter_m &&
        g.dielectric_diameter_m < g.shield_diameter_m)) {
    throw Error(ErrorCode::invalid_argument,
                "cable '" + name + "': need 0 < center < dielectric < shield diameter");
  }
  center.validate();
  dielectric.validate();
  outer.validate();
  if (attenuation_curve.empty()) {
    throw Error(ErrorCode::invalid_argument, "cable '" + name + "': empty attenuation curve");
  }
  for (std::size_t i = 1; i < attenuation_curve.size(); ++i) {
    if (!(attenuation_curve[i].first > attenuation_curve[i - 1].first)) {
      throw Error(ErrorCode::invalid_argument,
                  "cable '" + name + "': attenuation frequencies must be strictly increasing");
    }
    if (attenuation_curve[i].second < attenuation_curve[i - 1].second) {
      throw Error(ErrorCode::invalid_argument,
                  "cable '" + name + "': attenuation must be non-decreasing in frequency");
    }
  }
  if (attenuation_curve.front().second < 0.0 || cryo_attenuation_scale < 0.0 ||
      dc_resistance_ohm_per_m < 0.0) {
    throw Error(ErrorCode::invalid_argument, "cable '" + name + "': negative loss parameter");
  }
}

CableSpec CableSpec::scaled(double scale) const {
  if (!(scale > 0.0)) throw Error(ErrorCode::invalid_argument, "diameter scale must be > 0");
  CableSpec out = *this;
  out.geometry.center_diameter_m *= scale;
  out.geometry.dielectric_diameter_m *= scale;
  out.geometry.shield_diameter_m *= scale;
  for (auto& p : out.attenuation_curve) p.second /= scale;
  out.dc_resistance_ohm_per_m /= scale * scale;
  return out;
}

double cable_attenuation_db(const CableSpec& cable, double frequency_Hz, double length_m,
                            bool cryogenic) {
  if (!(length_m >= 0.0)) throw Error(ErrorCode::invalid_argument, "negative cable length");
  const auto& c = cable.attenuation_curve;
  if (frequency_Hz < c.front().first || frequency_Hz > c.back().first) {
    throw Error(ErrorCode::range, "cable '" + cable.name + "': frequency " + fmt_num(frequency_Hz) +
                                      " Hz outside attenuation data [" + fmt_num(c.front().first) +
                                      ", " + fmt_num(c.back().first) + "] Hz");
  }
  if (length_m == 0.0) return 0.0;
  if (cryogenic && cable.superconducting_transition_K) return 0.0;
  double per_m = c.front().second;
  if (c.size() > 1) {
    const std::size_t i = bracket(c, frequency_Hz);
    const double w = (frequency_Hz - c[i].first) / (c[i + 1].first - c[i].first);
    per_m = c[i].second + w * (c[i + 1].second - c[i].second);
  }
  if (cryogenic) per_m *= cable.cryo_attenuation_scale;
  return per_m * length_m;
}

double TwistedPairSpec::conductor_area() const {
  return wires_per_pair * kPi * wire_diameter_m * wire_diameter_m / 4.0;
}

// ---------------------------------------------------------------------------
// Catalog

const Material& Catalog::material(const std::string& name) const {
  auto it = materials_.find(name);
  if (it == materials_.end()) throw Error(ErrorCode::lookup, "unknown material '" + name + "'");
  return it->second;
}

const CableSpec& Catalog::cable(const std::string& name) const {
  auto it = cables_.find(name);
  if (it == cables_.end()) throw Error(ErrorCode::lookup, "unknown cable '" + name + "'");
  return it->second;
}

const TwistedPairSpec& Catalog::twisted_pair(const std::string& name) const {
  auto it = twisted_pairs_.find(name);
  if (it == twisted_pairs_.end()) {
    throw Error(ErrorCode::lookup, "unknown twisted pair '" + name + "'");
  }
  return it->second;
}

std::vector<std::string> Catalog::material_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : materials_) out.push_back(k);
  return out;
}

std::vector<std::string> Catalog::cable_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : cables_) out.push_back(k);
  return out;
}

void Catalog::add_material(Material m) {
  m.validate();
  std::string key = m.name;
  materials_.insert_or_assign(key, std::move(m));
}

void Catalog::add_cable(CableSpec c) {
  c.validate();
  std::string key = c.name;
  cables_.insert_or_assign(key, std::move(c));
}

void Catalog::add_twisted_pair(TwistedPairSpec t) {
  if (!(t.wire_diameter_m > 0.0) || t.wires_per_pair < 1) {
    throw Error(ErrorCode::invalid_argument, "twisted pair '" + t.name + "': bad geometry");
  }
  t.wire.validate();
  std::string key = t.name;
  twisted_pairs_.insert_or_assign(key, std::move(t));
}

Catalog Catalog::parse(const std::string& text, const std::string& origin) {
  using detail::ObjectReader;
  const auto doc = detail::parse_json_text(text, origin);
  ObjectReader root(doc, origin);
  Catalog cat;
  const int version = root.integer("schema_version");
  if (version != 1) root.fail("schema_version", "unsupported version " + std::to_string(version));
  if (root.has("units")) root.raw("units");  // informational

  auto wrap = [](const ObjectReader& r, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::invalid_argument || e.code() == ErrorCode::lookup) {
        throw Error(ErrorCode::config, r.path() + ": " + e.what());
      }
      throw;
    }
  };

  for (auto& m : root.object_list("materials")) {
    Material mat;
    mat.name = m.string("name");
    const std::string rule = m.string_or("extrapolation", "linear_to_zero");
    if (rule == "linear_to_zero") {
      mat.extrapolation = Extrapolation::linear_to_zero;
    } else if (rule == "forbidden") {
      mat.extrapolation = Extrapolation::forbidden;
    } else {
      m.fail("extrapolation", "expected 'linear_to_zero' or 'forbidden'");
    }
    m.opt_string("source");
    mat.points = m.pair_list("points");
    m.finish();
    wrap(m, [&] { cat.add_material(std::move(mat)); });
  }

  for (auto& c : root.object_list("cables")) {
    CableSpec cable;
    cable.name = c.string("name");
    cable.geometry.center_diameter_m = c.number("center_conductor_diameter_m");
    cable.geometry.dielectric_diameter_m = c.number("dielectric_diameter_m");
    cable.geometry.shield_diameter_m = c.number("shield_diameter_m");
    const auto center = c.string("center_material");
    const auto dielectric = c.string("dielectric_material");
    const auto outer = c.string("outer_material");
    cable.attenuation_curve = c.pair_list("attenuation_dB_per_m");
    cable.cryo_attenuation_scale = c.number_or("cryo_attenuation_scale", 8.2 / 9.7);
    cable.dc_resistance_ohm_per_m = c.number_or("dc_resistance_ohm_per_m", 0.0);
    cable.superconducting_transition_K = c.opt_number("superconducting_transition_K");
    c.finish();
    wrap(c, [&] {
      cable.center = cat.material(center);
      cable.dielectric = cat.material(dielectric);
      cable.outer = cat.material(outer);
      cat.add_cable(std::move(cable));
    });
  }

  if (root.has("twisted_pairs")) {
    for (auto& t : root.object_list("twisted_pairs")) {
      TwistedPairSpec tp;
      tp.name = t.string("name");
      const auto wire = t.string("wire_material");
      tp.wire_diameter_m = t.number("wire_diameter_m");
      tp.wires_per_pair = t.integer_or("wires_per_pair", 2);
      t.finish();
      wrap(t, [&] {
        tp.wire = cat.material(wire);
        cat.add_twisted_pair(std::move(tp));
      });
    }
  }
  root.finish();
  return cat;
}

Catalog Catalog::load_file(const std::string& path) {
  return parse(detail::read_text_file(path), path);
}

std::string default_data_dir() {
  if (const char* env = std::getenv("CRYOBUDGET_DATA_DIR"); env && *env) return env;
#ifdef CRYOBUDGET_DATA_DIR
  return CRYOBUDGET_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace cryo
