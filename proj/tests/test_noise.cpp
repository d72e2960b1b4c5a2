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

#include "core/noise.hpp"
#include "core/units.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cryo;
using cryo::testing::bundled_catalog;
using cryo::testing::rel_diff;

namespace {

constexpr double kH = 6.62607015e-34;
constexpr double kKb = 1.380649e-23;

double planck_oracle(double t, double f) { return 1.0 / (std::exp(kH * f / (kKb * t)) - 1.0); }

// Thin-slice cascade of a linear temperature ramp, written out longhand.
double ramp_oracle(double n_in, double db, double t0, double t1, double f, int slices) {
  const double a = std::pow(10.0, db / 10.0 / slices);
  double n = n_in;
  for (int k = 0; k < slices; ++k) {
    const double t = t0 + (t1 - t0) * (k + 0.5) / slices;
    n = n / a + (1.0 - 1.0 / a) * planck_oracle(t, f);
  }
  return n;
}

}  // namespace

TEST_CASE("Bose-Einstein occupation matches the Planck formula") {
  for (double t : {0.01, 0.1, 1.0, 35.0, 300.0}) {
    CAPTURE(t);
    CHECK(rel_diff(bose_einstein(t, 6e9), planck_oracle(t, 6e9)) < 1e-12);
  }
  CHECK(bose_einstein(0.0, 6e9) == 0.0);
  CHECK_THROWS_AS(bose_einstein(-1.0, 6e9), Error);
  CHECK_THROWS_AS(bose_einstein(1.0, 0.0), Error);
}

TEST_CASE("thermal voltage density reduces to the two-sided 2kTR classically") {
  CHECK(rel_diff(thermal_voltage_psd(300.0, 50.0, 1e6), 2 * kKb * 300.0 * 50.0) < 1e-4);
}

TEST_CASE("single attenuator is a beamsplitter") {
  AttenuatorChain c;
  c.elements.emplace_back(DiscreteAttenuator{100.0, 2.85, "A"});
  const double n0 = bose_einstein(300.0, 6e9);
  const auto p = cascade_photon_number(c, 6e9);
  CHECK(p.n.size() == 2);
  CHECK(p.n[0] == n0);
  CHECK(rel_diff(p.output(), n0 / 100.0 + 0.99 * bose_einstein(2.85, 6e9)) < 1e-14);
}

TEST_CASE("unit attenuation passes the input unchanged") {
  AttenuatorChain c;
  c.elements.emplace_back(DiscreteAttenuator{1.0, 0.01, "A"});
  c.elements.emplace_back(DistributedSegment{0.0, 4.0, 0.1, "cable"});
  CHECK(cascade_photon_number(c, 6e9, 3.5).output() == 3.5);
}

TEST_CASE("two attenuators at one temperature compose multiplicatively") {
  const double t = 0.882;
  AttenuatorChain two, one;
  two.elements.emplace_back(DiscreteAttenuator{7.0, t, "a"});
  two.elements.emplace_back(DiscreteAttenuator{13.0, t, "b"});
  one.elements.emplace_back(DiscreteAttenuator{91.0, t, "ab"});
  CHECK(rel_diff(cascade_photon_number(two, 6e9).output(), cascade_photon_number(one, 6e9).output()) < 1e-12);
}

TEST_CASE("zero-temperature chain divides the input by the total attenuation") {
  AttenuatorChain c;
  for (double db : {10.0, 20.0, 30.0}) c.elements.emplace_back(DiscreteAttenuator{db_to_ratio(db), 0.0, ""});
  CHECK(rel_diff(cascade_photon_number(c, 6e9, 1041.0).output(), 1041.0 * 1e-6) < 1e-12);
}

TEST_CASE("distributed segment at uniform temperature equals a discrete attenuator") {
  for (double t : {0.02, 2.85, 35.0}) {
    DistributedSegment s{7.5, t, t, ""};
    const double n_in = 12.0;
    const double a = db_to_ratio(7.5);
    CHECK(rel_diff(distributed_segment_output(s, 6e9, n_in), n_in / a + (1 - 1 / a) * bose_einstein(t, 6e9)) < 1e-6);
  }
}

TEST_CASE("distributed segment with a gradient matches a longhand slice cascade") {
  DistributedSegment s{4.0, 35.0, 2.85, ""};
  const double got = distributed_segment_output(s, 6e9, 1041.0);
  CHECK(rel_diff(got, ramp_oracle(1041.0, 4.0, 35.0, 2.85, 6e9, 200000)) < 1e-8);
}

TEST_CASE("adding attenuation never raises downstream occupation") {
  const auto f = FridgeModel::reference();
  const auto base = make_attenuated_line(f, "UT085-SS-SS", {0, 20, 0, 20, 20});
  const double n0 = cascade_photon_number(line_noise_chain(base, f, bundled_catalog(), 6e9, false), 6e9).output();
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<double> db{0, 20, 0, 20, 20};
    db[i] += 3.0;
    const auto l = make_attenuated_line(f, "UT085-SS-SS", db);
    CHECK(cascade_photon_number(line_noise_chain(l, f, bundled_catalog(), 6e9, false), 6e9).output() <= n0);
  }
}

TEST_CASE("line noise chain uses plate temperatures and skips empty stages") {
  const auto f = FridgeModel::reference();
  const auto l = make_attenuated_line(f, "UT085-SS-SS", {0, 20, 0, 20, 20});
  const auto lossless = line_noise_chain(l, f, bundled_catalog(), 6e9, false);
  REQUIRE(lossless.elements.size() == 3);
  const auto& a = std::get<DiscreteAttenuator>(lossless.elements[0]);
  CHECK(a.temperature_K == 2.85);
  CHECK(rel_diff(a.attenuation, 100.0) < 1e-14);
  const auto lossy = line_noise_chain(l, f, bundled_catalog(), 6e9, true);
  CHECK(lossy.elements.size() > lossless.elements.size());
}

TEST_CASE("component temperature override replaces the plate temperature") {
  const auto f = FridgeModel::reference();
  auto l = make_attenuated_line(f, "UT085-SS-SS", {0, 20, 0, 20, 20});
  l.components.back().temperature_override_K = 0.05;
  const auto chain = line_noise_chain(l, f, bundled_catalog(), 6e9, false);
  CHECK(std::get<DiscreteAttenuator>(chain.elements.back()).temperature_K == 0.05);
}

TEST_CASE("reference attenuation is the ratio of neighbouring occupations") {
  const auto f = FridgeModel::reference();
  const auto ref = reference_attenuation(f, 6e9);
  REQUIRE(ref.size() == 5);
  CHECK(rel_diff(ref[1], bose_einstein(35.0, 6e9) / bose_einstein(2.85, 6e9)) < 1e-12);
}

TEST_CASE("current noise interpolates between room temperature and the 4K floor") {
  const double s0 = current_noise_psd(1.0, 300.0, 3.0, 50.0);
  CHECK(rel_diff(s0, 2 * kKb * 300.0 / 50.0) < 1e-12);
  CHECK(rel_diff(current_noise_psd(1.0, 300.0, 3.0, 50.0, PsdConvention::one_sided), 2 * s0) < 1e-12);
  const double big = current_noise_psd(1e12, 300.0, 3.0, 50.0);
  CHECK(rel_diff(big, 2 * kKb * 3.0 / 50.0) < 1e-9);
}

TEST_CASE("flux sensitivity vanishes at the sweet spot and diverges at half flux") {
  FluxCoupling c;
  c.flux = 0.0;
  CHECK(flux_sensitivity(c) == 0.0);
  CHECK_FALSE(dephasing_bounds(1e-22, 0.0).has_value());
  c.flux = 0.3;
  const double moderate = flux_sensitivity(c);
  c.flux = 0.4999;
  CHECK(flux_sensitivity(c) > 50 * moderate);
  c.flux = 0.6;
  CHECK_THROWS_AS(flux_sensitivity(c), Error);
}

TEST_CASE("bias flux for a 10% detuning") {
  const double phi = flux_for_detuning(0.1);
  CHECK(phi == doctest::Approx(0.2724).epsilon(1e-3));
  CHECK(rel_diff(std::cos(3.14159265358979323846 * phi), 0.6561) < 1e-12);
}

TEST_CASE("echo bound is twice the Ramsey bound") {
  const auto b = dephasing_bounds(3e-24, 1.7e11);
  REQUIRE(b.has_value());
  CHECK(b->t2_echo_s == 2.0 * b->t2_star_s);
  CHECK(rel_diff(b->t2_star_s, 2.0 / (1.7e11 * 1.7e11 * 3e-24)) < 1e-12);
}

TEST_CASE("sweet-spot calibration inverts the dephasing bound") {
  const double s = 1.1e-24;
  const double phi = flux_for_detuning(0.1);
  const double w0 = calibrate_sweet_spot_omega(46e-6, s, 500.0, phi);
  FluxCoupling c{500.0, w0, phi};
  CHECK(rel_diff(dephasing_bounds(s, flux_sensitivity(c))->t2_star_s, 46e-6) < 1e-12);
}
