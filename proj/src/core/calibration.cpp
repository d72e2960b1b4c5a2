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

#include "core/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/errors.hpp"
#include "core/report.hpp"

namespace cryo {

namespace {

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double rms = 0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw Error(ErrorCode::fit, "degenerate fit: all applied powers equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

}  // namespace

ResponseCoefficients fit_reference(const std::vector<MeasurementSeries>& series,
                                   const FridgeModel& fridge, const ReferenceFitOptions& options) {
  if (!(options.window_fraction > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "fit window fraction must be > 0");
  }
  const std::size_t n = fridge.stages.size();
  ResponseCoefficients rc;
  rc.dP_dT.assign(n, 0.0);
  rc.dT_dP_cross.assign(n, 0.0);
  rc.residual_rms_K.assign(n, 0.0);
  rc.window_rows.assign(n, 0);

  for (const auto& s : series) {
    const std::size_t h = fridge.stage_index(s.heated_stage);
    if (s.rows.size() < 3) {
      throw Error(ErrorCode::fit, "series heating '" + s.heated_stage + "' needs at least 3 rows");
    }
    for (const auto& row : s.rows) {
      if (row.temperatures_K.size() != n) {
        throw Error(ErrorCode::invalid_argument, "row has " + std::to_string(row.temperatures_K.size()) +
                                                     " temperatures, expected " + std::to_string(n));
      }
    }
    if (s.rows.front().applied_power_W != 0.0) {
      throw Error(ErrorCode::fit, "series heating '" + s.heated_stage + "' lacks a zero-power baseline");
    }
    for (std::size_t r = 1; r < s.rows.size(); ++r) {
      if (s.rows[r].applied_power_W < s.rows[r - 1].applied_power_W) {
        throw Error(ErrorCode::fit, "rows must be sorted by applied power");
      }
      if (s.rows[r].temperatures_K[h] < s.rows[r - 1].temperatures_K[h]) {
        rc.warnings.push_back("non-monotone temperature response on '" + s.heated_stage + "'");
      }
    }
    const double t0 = s.rows.front().temperatures_K[h];
    std::vector<std::size_t> window;
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
      if ((s.rows[r].temperatures_K[h] - t0) / t0 <= options.window_fraction) window.push_back(r);
    }
    if (window.size() < 2) {
      window = {0, 1};
      rc.warnings.push_back("fit window on '" + s.heated_stage + "' holds fewer than 2 rows; using 2");
    }
    std::vector<double> p, t;
    for (std::size_t r : window) {
      p.push_back(s.rows[r].applied_power_W);
      t.push_back(s.rows[r].temperatures_K[h]);
    }
    const LineFit self = least_squares(p, t);
    if (!(self.slope > 0.0)) {
      throw Error(ErrorCode::fit, "temperature of '" + s.heated_stage + "' does not rise with power");
    }
    rc.dP_dT[h] = 1.0 / self.slope;
    rc.residual_rms_K[h] = self.rms;
    rc.window_rows[h] = static_cast<int>(window.size());
    if (h + 1 < n) {
      std::vector<double> below;
      for (std::size_t r : window) below.push_back(s.rows[r].temperatures_K[h + 1]);
      rc.dT_dP_cross[h + 1] = least_squares(p, below).slope;
    }
  }
  return rc;
}

std::vector<double> apply_loads(const ResponseCoefficients& c, const std::vector<double>& loads_W) {
  const std::size_t n = loads_W.size();
  if (c.dP_dT.size() != n || c.dT_dP_cross.size() != n) {
    throw Error(ErrorCode::invalid_argument, "coefficient and load vectors differ in length");
  }
  std::vector<double> dt(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (loads_W[i] != 0.0) {
      if (!(c.dP_dT[i] > 0.0)) throw Error(ErrorCode::invalid_argument, "missing self response");
      dt[i] += loads_W[i] / c.dP_dT[i];
    }
    if (i > 0) dt[i] += c.dT_dP_cross[i] * loads_W[i - 1];
  }
  return dt;
}

ExtractedLoads extract_passive_load(const std::vector<double>& baseline_K,
                                    const std::vector<double>& loaded_K,
                                    const ResponseCoefficients& c, bool cross_correction) {
  const std::size_t n = baseline_K.size();
  if (loaded_K.size() != n || c.dP_dT.size() != n || c.dT_dP_cross.size() != n) {
    throw Error(ErrorCode::invalid_argument, "temperature and coefficient vectors differ in length");
  }
  ExtractedLoads out;
  out.loads_W.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double dt = loaded_K[i] - baseline_K[i];
    if (cross_correction && i > 0) dt -= c.dT_dP_cross[i] * out.loads_W[i - 1];
    if (dt == 0.0) continue;
    if (!(c.dP_dT[i] > 0.0)) {
      throw Error(ErrorCode::invalid_argument,
                  "no response coefficient for stage " + std::to_string(i));
    }
    if (dt < 0.0) {
      out.warnings.push_back("stage " + std::to_string(i) +
                             ": corrected temperature rise is negative; load set to 0");
      continue;
    }
    out.loads_W[i] = c.dP_dT[i] * dt;
  }
  return out;
}

ResistanceFit fit_effective_resistance(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 3) throw Error(ErrorCode::fit, "resistance fit needs at least 3 points");
  bool distinct = false;
  for (const auto& p : pts) {
    if (p.first != pts.front().first) distinct = true;
  }
  if (!distinct) throw Error(ErrorCode::fit, "degenerate currents: all points at the same current");
  double sxy = 0, sxx = 0;
  for (const auto& [i, w] : pts) {
    const double x = i * i;
    sxy += x * w;
    sxx += x * x;
  }
  ResistanceFit f;
  f.r_eff_ohm = sxy / sxx;
  double ss = 0;
  for (const auto& [i, w] : pts) {
    const double r = w - f.r_eff_ohm * i * i;
    ss += r * r;
  }
  f.std_error_ohm = std::sqrt(ss / static_cast<double>(pts.size() - 1) / sxx);
  return f;
}

std::string to_string(Validity v) {
  switch (v) {
    case Validity::valid:
      return "valid";
    case Validity::invalid:
      return "invalid";
    default:
      return "unknown";
  }
}

StillFlowCheck still_flow_normalize(std::optional<double> still_temperature_K, double target_K,
                                    double tolerance_K) {
  StillFlowCheck out;
  if (!still_temperature_K) {
    out.message = "no Still temperature recorded; CP/MXC extraction validity unknown";
    return out;
  }
  const double dev = *still_temperature_K - target_K;
  std::ostringstream ss;
  if (std::abs(dev) <= tolerance_K) {
    out.validity = Validity::valid;
    ss << "Still at " << format_number(*still_temperature_K) << " K matches the reference flow";
  } else {
    out.validity = Validity::invalid;
    ss << "Still at " << format_number(*still_temperature_K) << " K deviates from "
       << format_number(target_K) << " K; CP/MXC extractions hold only at the reference flow";
  }
  out.message = ss.str();
  return out;
}

namespace {

struct CsvLines {
  std::vector<std::pair<int, std::string>> meta;  // (line number, text after '#')
  std::vector<std::pair<int, std::vector<std::string>>> rows;
};

CsvLines split_lines(const std::string& text, const std::string& origin) {
  CsvLines out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      out.meta.emplace_back(number, line.substr(first + 1));
      continue;
    }
    out.rows.emplace_back(number, split_csv_record(line, origin + ":" + std::to_string(number)));
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

MeasurementSeries parse_measurement_csv(const std::string& text, const FridgeModel& fridge,
                                        const std::string& origin) {
  const CsvLines lines = split_lines(text, origin);
  MeasurementSeries s;
  for (const auto& [number, meta] : lines.meta) {
    const auto eq = meta.find('=');
    if (eq == std::string::npos) continue;
    if (trim(meta.substr(0, eq)) == "heated_stage") {
      s.heated_stage = trim(meta.substr(eq + 1));
      try {
        fridge.stage_index(s.heated_stage);
      } catch (const Error& e) {
        throw Error(ErrorCode::parse, origin + ":" + std::to_string(number) + ": " + e.what());
      }
    }
  }
  if (s.heated_stage.empty()) {
    throw Error(ErrorCode::parse, origin + ": missing '# heated_stage=<stage>' metadata line");
  }
  if (lines.rows.empty()) throw Error(ErrorCode::parse, origin + ": missing header row");
  const auto& [header_line, header] = lines.rows.front();
  std::vector<std::string> expected{"applied_power_W"};
  for (const auto& st : fridge.stages) expected.push_back("T_" + st.name);
  if (header != expected) {
    std::string want;
    for (const auto& e : expected) want += (want.empty() ? "" : ",") + e;
    throw Error(ErrorCode::parse,
                origin + ":" + std::to_string(header_line) + ": expected header '" + want + "'");
  }
  for (std::size_t r = 1; r < lines.rows.size(); ++r) {
    const auto& [number, fields] = lines.rows[r];
    const std::string where = origin + ":" + std::to_string(number);
    if (fields.size() != expected.size()) {
      throw Error(ErrorCode::parse, where + ": expected " + std::to_string(expected.size()) +
                                        " fields, found " + std::to_string(fields.size()));
    }
    MeasurementRow row;
    row.applied_power_W = parse_csv_number(fields[0], where);
    if (row.applied_power_W < 0.0) throw Error(ErrorCode::parse, where + ": negative applied power");
    for (std::size_t k = 1; k < fields.size(); ++k) {
      const double t = parse_csv_number(fields[k], where);
      if (!(t > 0.0)) throw Error(ErrorCode::parse, where + ": temperatures must be > 0");
      row.temperatures_K.push_back(t);
    }
    if (!s.rows.empty() && row.applied_power_W < s.rows.back().applied_power_W) {
      throw Error(ErrorCode::parse, where + ": rows must be sorted by applied power");
    }
    s.rows.push_back(std::move(row));
  }
  if (s.rows.empty()) throw Error(ErrorCode::parse, origin + ": no data rows");
  return s;
}

ResistanceTable parse_resistance_csv(const std::string& text, const std::string& origin) {
  const CsvLines lines = split_lines(text, origin);
  if (lines.rows.empty()) throw Error(ErrorCode::parse, origin + ": missing header row");
  const auto& [header_line, header] = lines.rows.front();
  const std::string hwhere = origin + ":" + std::to_string(header_line);
  if (header.size() < 2 || header[0] != "current_A") {
    throw Error(ErrorCode::parse, hwhere + ": expected header 'current_A,load_<stage>_W,...'");
  }
  ResistanceTable t;
  for (std::size_t k = 1; k < header.size(); ++k) {
    const auto& h = header[k];
    if (h.size() <= 7 || h.rfind("load_", 0) != 0 || h.substr(h.size() - 2) != "_W") {
      throw Error(ErrorCode::parse, hwhere + ": column '" + h + "' is not of the form load_<stage>_W");
    }
    t.columns.push_back(h.substr(5, h.size() - 7));
  }
  t.data.resize(t.columns.size());
  for (std::size_t r = 1; r < lines.rows.size(); ++r) {
    const auto& [number, fields] = lines.rows[r];
    const std::string where = origin + ":" + std::to_string(number);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::parse, where + ": expected " + std::to_string(header.size()) +
                                        " fields, found " + std::to_string(fields.size()));
    }
    const double i = parse_csv_number(fields[0], where);
    for (std::size_t k = 1; k < fields.size(); ++k) {
      t.data[k - 1].emplace_back(i, parse_csv_number(fields[k], where));
    }
  }
  if (lines.rows.size() < 2) throw Error(ErrorCode::parse, origin + ": no data rows");
  return t;
}

}  // namespace cryo
