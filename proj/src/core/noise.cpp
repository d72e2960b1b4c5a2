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

#include "core/noise.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/units.hpp"

namespace cryo {

double bose_einstein(double temperature_K, double frequency_Hz) {
  if (!(temperature_K >= 0.0)) throw Error(ErrorCode::invalid_argument, "temperature must be >= 0");
  if (!(frequency_Hz > 0.0)) throw Error(ErrorCode::invalid_argument, "frequency must be > 0");
  if (temperature_K == 0.0) return 0.0;
  const double x = kPlanck * frequency_Hz / (kBoltzmann * temperature_K);
  return 1.0 / std::expm1(x);
}

double thermal_voltage_psd(double temperature_K, double resistance_ohm, double frequency_Hz) {
  if (!(resistance_ohm > 0.0)) throw Error(ErrorCode::invalid_argument, "resistance must be > 0");
  if (temperature_K == 0.0) return 0.0;
  const double x = kPlanck * frequency_Hz / (kBoltzmann * temperature_K);
  return 2.0 * kBoltzmann * temperature_K * resistance_ohm * x *
         bose_einstein(temperature_K, frequency_Hz);
}

namespace {

double attenuate(double n_in, double attenuation, double n_bath) {
  const double loss = -std::expm1(-std::log(attenuation));  // 1 - 1/A
  return n_in / attenuation + loss * n_bath;
}

double slice_pass(const DistributedSegment& s, double frequency_Hz, double n_in, long slices) {
  const double a = db_to_ratio(s.attenuation_dB / static_cast<double>(slices));
  double n = n_in;
  for (long k = 0; k < slices; ++k) {
    const double w = (static_cast<double>(k) + 0.5) / static_cast<double>(slices);
    const double t = s.t_start_K + w * (s.t_end_K - s.t_start_K);
    n = attenuate(n, a, bose_einstein(t, frequency_Hz));
  }
  return n;
}

}  // namespace

double distributed_segment_output(const DistributedSegment& segment, double frequency_Hz,
                                  double n_in, int* slices_used) {
  if (!(segment.attenuation_dB >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "distributed attenuation must be >= 0 dB");
  }
  if (!(segment.t_start_K >= 0.0) || !(segment.t_end_K >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "segment temperatures must be >= 0");
  }
  long slices = 1024;
  double prev = slice_pass(segment, frequency_Hz, n_in, slices);
  constexpr long kMaxSlices = 1L << 22;
  while (slices < kMaxSlices) {
    slices *= 2;
    const double next = slice_pass(segment, frequency_Hz, n_in, slices);
    const double scale = std::max(std::abs(next), 1e-300);
    const bool converged = std::abs(next - prev) <= 1e-9 * scale;
    prev = next;
    if (converged) break;
  }
  if (slices_used) *slices_used = static_cast<int>(slices);
  return prev;
}

PhotonNumberProfile cascade_photon_number(const AttenuatorChain& chain, double frequency_Hz,
                                          std::optional<double> n_input) {
  if (!(frequency_Hz > 0.0)) throw Error(ErrorCode::invalid_argument, "frequency must be > 0");
  PhotonNumberProfile out;
  out.frequency_Hz = frequency_Hz;
  const double n0 = n_input.value_or(bose_einstein(kRoomTemperature, frequency_Hz));
  if (!(n0 >= 0.0)) throw Error(ErrorCode::invalid_argument, "input occupation must be >= 0");
  out.n.push_back(n0);
  out.labels.push_back("input");
  for (const auto& element : chain.elements) {
    const double n_prev = out.n.back();
    if (const auto* d = std::get_if<DiscreteAttenuator>(&element)) {
      if (!(d->attenuation >= 1.0)) {
        throw Error(ErrorCode::invalid_argument, "attenuation must be >= 1 (linear)");
      }
      out.n.push_back(attenuate(n_prev, d->attenuation, bose_einstein(d->temperature_K, frequency_Hz)));
      out.labels.push_back(d->label);
    } else {
      const auto& s = std::get<DistributedSegment>(element);
      out.n.push_back(distributed_segment_output(s, frequency_Hz, n_prev));
      out.labels.push_back(s.label);
    }
  }
  return out;
}

std::vector<double> reference_attenuation(const FridgeModel& fridge, double frequency_Hz) {
  std::vector<double> out;
  for (std::size_t p = 1; p < fridge.position_count(); ++p) {
    out.push_back(bose_einstein(fridge.temperature_at(p - 1), frequency_Hz) /
                  bose_einstein(fridge.temperature_at(p), frequency_Hz));
  }
  return out;
}

AttenuatorChain line_noise_chain(const LineSpec& line, const FridgeModel& fridge,
                                 const Catalog& catalog, double frequency_Hz, bool with_cable_loss) {
  line.check_topology(fridge);
  AttenuatorChain chain;
  for (const auto& run : line.runs) {
    const CableSpec& cable = catalog.cable(run.cable);
    const std::size_t a = fridge.position_of(run.from);
    const std::size_t b = fridge.position_of(run.to);
    for (std::size_t p = a + 1; p <= b; ++p) {
      const double t_top = fridge.temperature_at(p - 1);
      const double t_bottom = fridge.temperature_at(p);
      if (with_cable_loss) {
        const bool cold = t_top <= 4.0 && t_bottom <= 4.0;
        const double db = cable_attenuation_db(cable, frequency_Hz, fridge.length_above(p), cold);
        chain.elements.push_back(
            DistributedSegment{db, t_top, t_bottom, fridge.name_at(p - 1) + "-" + fridge.name_at(p)});
      }
      for (const Component* c : line.components_at(fridge.name_at(p))) {
        const double t = c->temperature_override_K.value_or(t_bottom);
        chain.elements.push_back(DiscreteAttenuator{db_to_ratio(c->attenuation_db_at(frequency_Hz)), t,
                                                    fridge.name_at(p) + ":" + to_string(c->kind)});
      }
    }
  }
  return chain;
}

double current_noise_psd(double attenuation_4k, double t_rt_K, double t_4k_K, double resistance_ohm,
                         PsdConvention convention) {
  if (!(attenuation_4k >= 1.0)) throw Error(ErrorCode::invalid_argument, "attenuation must be >= 1");
  if (!(resistance_ohm > 0.0)) throw Error(ErrorCode::invalid_argument, "resistance must be > 0");
  const double sides = convention == PsdConvention::one_sided ? 2.0 : 1.0;
  auto s = [&](double t) { return sides * 2.0 * kBoltzmann * t / resistance_ohm; };
  return s(t_rt_K) / attenuation_4k + (attenuation_4k - 1.0) / attenuation_4k * s(t_4k_K);
}

double flux_sensitivity(const FluxCoupling& c) {
  if (!(c.mutual_inductance > 0.0)) throw Error(ErrorCode::invalid_argument, "M must be > 0");
  const double x = kPi * c.flux;
  const double cx = std::cos(x);
  if (!(cx > 0.0)) throw Error(ErrorCode::domain, "cos(pi Phi / Phi0) <= 0: outside the tunable branch");
  return c.mutual_inductance * c.sweet_spot_omega * kPi * std::sin(x) / (2.0 * std::sqrt(cx));
}

double flux_for_detuning(double fraction) {
  if (!(fraction >= 0.0 && fraction < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "detuning fraction must lie in [0, 1)");
  }
  const double r = 1.0 - fraction;
  return std::acos(r * r * r * r) / kPi;
}

std::optional<DephasingBounds> dephasing_bounds(double current_psd, double sensitivity) {
  if (!(current_psd > 0.0)) throw Error(ErrorCode::invalid_argument, "noise density must be > 0");
  if (sensitivity == 0.0) return std::nullopt;
  DephasingBounds b;
  b.t2_star_s = 2.0 / (sensitivity * sensitivity * current_psd);
  b.t2_echo_s = 2.0 * b.t2_star_s;
  return b;
}

double calibrate_sweet_spot_omega(double t2_star_s, double current_psd, double mutual_inductance,
                                  double flux) {
  if (!(t2_star_s > 0.0)) throw Error(ErrorCode::invalid_argument, "T2* must be > 0");
  FluxCoupling unit{mutual_inductance, 1.0, flux};
  const double d_unit = flux_sensitivity(unit);
  if (d_unit == 0.0) throw Error(ErrorCode::domain, "no flux sensitivity at the sweet spot");
  if (!(current_psd > 0.0)) throw Error(ErrorCode::invalid_argument, "noise density must be > 0");
  return std::sqrt(2.0 / (t2_star_s * current_psd)) / std::abs(d_unit);
}

}  // namespace cryo
