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

#include "core/attenopt.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "core/budget.hpp"
#include "core/errors.hpp"
#include "core/noise.hpp"

namespace cryo {

double ConfigCandidate::max_fraction() const {
  double m = 0.0;
  for (double f : fractions) m = std::max(m, f);
  return m;
}

AttenContext default_atten_context(const FridgeModel& fridge, const Catalog& catalog) {
  AttenContext ctx;
  ctx.fridge = fridge;
  ctx.catalog = &catalog;
  ctx.line_template = make_attenuated_line(fridge, "UT085-SS-SS",
                                           std::vector<double>(fridge.stages.size(), 0.0));
  return ctx;
}

ConfigCandidate evaluate_config(const std::vector<double>& stage_dB, const AttenContext& ctx) {
  if (!ctx.catalog) throw Error(ErrorCode::invalid_argument, "attenuation context lacks a catalog");
  const std::size_t n = ctx.fridge.stages.size();
  if (stage_dB.size() != n) {
    throw Error(ErrorCode::invalid_argument, "config has " + std::to_string(stage_dB.size()) +
                                                 " stages, fridge has " + std::to_string(n));
  }
  LineSpec line = ctx.line_template;
  std::erase_if(line.components,
                [](const Component& c) { return c.kind == ComponentKind::attenuator; });
  ConfigCandidate cand;
  cand.stage_dB = stage_dB;
  for (std::size_t i = 0; i < n; ++i) {
    if (stage_dB[i] < 0.0) throw Error(ErrorCode::invalid_argument, "negative attenuation");
    if (stage_dB[i] > 0.0) {
      Component c;
      c.stage = ctx.fridge.stages[i].name;
      c.attenuation_dB = stage_dB[i];
      line.components.push_back(c);
      ++cand.attenuator_count;
    }
  }
  const Catalog& cat = *ctx.catalog;
  const auto chain = line_noise_chain(line, ctx.fridge, cat, ctx.frequency_Hz, ctx.noise_with_cable_loss);
  cand.n_mxc = cascade_photon_number(chain, ctx.frequency_Hz).output();

  const double att = line_attenuation_db(line, ctx.fridge, cat, ctx.frequency_Hz, ctx.load_with_cable_loss);
  const double input = 1e-3 * std::pow(10.0, (ctx.drive_target_dBm + att) / 10.0);
  const auto loads =
      active_loads_per_stage(line, input, ctx.frequency_Hz, ctx.fridge, cat, ctx.load_with_cable_loss);
  cand.fractions.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    cand.fractions[i] = ctx.line_count * loads.stage_W[i] / ctx.fridge.stages[i].cooling_power_W;
  }
  return cand;
}

std::string to_string(Objective o) {
  switch (o) {
    case Objective::min_n_mxc:
      return "min_n_mxc";
    case Objective::min_max_fraction:
      return "min_max_fraction";
    default:
      return "pareto";
  }
}

Objective objective_from_string(const std::string& text) {
  if (text == "min_n_mxc") return Objective::min_n_mxc;
  if (text == "min_max_fraction") return Objective::min_max_fraction;
  if (text == "pareto") return Objective::pareto;
  throw Error(ErrorCode::invalid_argument,
              "unknown objective '" + text + "' (expected min_n_mxc, min_max_fraction or pareto)");
}

namespace {

bool feasible(const ConfigCandidate& c, const SearchConstraints& sc, const FridgeModel& fridge) {
  for (const auto& [stage, limit] : sc.max_fraction) {
    if (c.fractions[fridge.stage_index(stage)] > limit) return false;
  }
  return true;
}

void compositions(const std::vector<double>& values, std::size_t stages, double remaining,
                  std::vector<double>& current, std::vector<std::vector<double>>& out) {
  const double tol = 1e-9 * std::max(1.0, std::abs(remaining));
  if (current.size() == stages) {
    if (std::abs(remaining) <= tol) out.push_back(current);
    return;
  }
  for (double v : values) {
    if (v > remaining + tol) continue;
    current.push_back(v);
    compositions(values, stages, remaining - v, current, out);
    current.pop_back();
  }
}

bool ranks_before(const ConfigCandidate& a, const ConfigCandidate& b, const SearchConstraints& sc) {
  if (a.feasible != b.feasible) return a.feasible;
  if (sc.count_penalty && a.attenuator_count != b.attenuator_count) {
    return a.attenuator_count < b.attenuator_count;
  }
  if (sc.objective == Objective::min_max_fraction) {
    if (a.max_fraction() != b.max_fraction()) return a.max_fraction() < b.max_fraction();
  } else if (a.n_mxc != b.n_mxc) {
    return a.n_mxc < b.n_mxc;
  }
  return a.stage_dB < b.stage_dB;
}

}  // namespace

std::vector<ConfigCandidate> enumerate(const SearchConstraints& sc, const AttenContext& ctx) {
  for (const auto& [stage, limit] : sc.max_fraction) {
    ctx.fridge.stage_index(stage);
    if (limit < 0.0) throw Error(ErrorCode::invalid_argument, "negative fraction limit");
  }
  std::set<double> unique(sc.allowed_dB.begin(), sc.allowed_dB.end());
  for (double v : unique) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw Error(ErrorCode::invalid_argument, "allowed dB must be >= 0");
  }
  std::vector<double> values(unique.begin(), unique.end());
  std::vector<std::vector<double>> configs;
  std::vector<double> current;
  if (sc.total_dB >= 0.0) compositions(values, ctx.fridge.stages.size(), sc.total_dB, current, configs);

  std::vector<ConfigCandidate> out;
  for (const auto& cfg : configs) {
    ConfigCandidate c = evaluate_config(cfg, ctx);
    c.feasible = feasible(c, sc, ctx.fridge);
    if (c.feasible || sc.include_infeasible) out.push_back(std::move(c));
  }
  if (sc.objective == Objective::pareto) {
    std::vector<ConfigCandidate> front;
    for (const auto& c : out) {
      if (!c.feasible) {
        front.push_back(c);
        continue;
      }
      bool dominated = false;
      for (const auto& d : out) {
        if (!d.feasible || &d == &c) continue;
        const bool no_worse = d.n_mxc <= c.n_mxc && d.max_fraction() <= c.max_fraction();
        const bool better = d.n_mxc < c.n_mxc || d.max_fraction() < c.max_fraction();
        if (no_worse && better) {
          dominated = true;
          break;
        }
      }
      if (!dominated) front.push_back(c);
    }
    out = std::move(front);
  }
  std::sort(out.begin(), out.end(),
            [&](const ConfigCandidate& a, const ConfigCandidate& b) { return ranks_before(a, b, sc); });
  return out;
}

std::vector<std::pair<double, double>> sweep_single_stage(const std::string& stage,
                                                          const std::vector<double>& values_dB,
                                                          const std::vector<double>& fixed_dB,
                                                          const AttenContext& ctx) {
  const std::size_t idx = ctx.fridge.stage_index(stage);
  std::vector<std::pair<double, double>> out;
  std::vector<double> cfg = fixed_dB;
  for (double v : values_dB) {
    if (cfg.size() > idx) cfg[idx] = v;
    out.emplace_back(v, evaluate_config(cfg, ctx).n_mxc);
  }
  return out;
}

ConfigCandidate refine_continuous(const ConfigCandidate& start, const SearchConstraints& sc,
                                  const AttenContext& ctx, double finest_step_dB) {
  if (!(finest_step_dB > 0.0)) throw Error(ErrorCode::invalid_argument, "step must be > 0");
  ConfigCandidate best = evaluate_config(start.stage_dB, ctx);
  best.feasible = feasible(best, sc, ctx.fridge);
  const std::size_t n = best.stage_dB.size();
  for (double step = 5.0; step >= finest_step_dB * 0.999; step /= 2.0) {
    bool improved = true;
    while (improved) {
      improved = false;
      ConfigCandidate round_best = best;
      for (std::size_t from = 0; from < n; ++from) {
        if (best.stage_dB[from] < step) continue;
        for (std::size_t to = 0; to < n; ++to) {
          if (to == from) continue;
          auto cfg = best.stage_dB;
          cfg[from] -= step;
          cfg[to] += step;
          ConfigCandidate c = evaluate_config(cfg, ctx);
          c.feasible = feasible(c, sc, ctx.fridge);
          const bool better = (c.feasible && !round_best.feasible) ||
                              (c.feasible == round_best.feasible && c.n_mxc < round_best.n_mxc * (1 - 1e-12));
          if (better) round_best = c;
        }
      }
      if (round_best.stage_dB != best.stage_dB) {
        best = round_best;
        improved = true;
      }
    }
  }
  return best;
}

}  // namespace cryo
