#!/usr/bin/env python3
# Copyright 2026 The cryobudget Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/catalog.json from the published cryogenic property fits.

The C++ library never evaluates these fits directly; it interpolates the
sampled tables (log-log) so users can drop in their own measured curves.
"""
import json
import math
import re
import sys


def nist_log_poly(coeffs):
    def k(t):
        x = math.log10(t)
        return 10 ** sum(c * x ** i for i, c in enumerate(coeffs))
    return k


def nist_copper(rrr_coeffs):
    a, b, c, d, e, f, g, h, i = rrr_coeffs

    def k(t):
        s = math.sqrt(t)
        num = a + c * s + e * t + g * t * s + i * t * t
        den = 1 + b * s + d * t + f * t * s + h * t * t
        return 10 ** (num / den)
    return k


SS304 = nist_log_poly([-1.4087, 1.3982, 0.2543, -0.6260, 0.2334, 0.4256, -0.4658, 0.1650, -0.0199])
PTFE = nist_log_poly([2.7380, -30.677, 89.430, -136.99, 124.69, -69.556, 23.320, -4.3135, 0.33829])
CU_RRR100 = nist_copper([2.2154, -0.47461, -0.88068, 0.13871, 0.29505, -0.02043, -0.04831, 0.001281, 0.003207])
BRASS = nist_log_poly([0.021035, -1.01835, 4.54083, -5.03374, 3.20536, -1.12933, 0.174057, -0.0038151])
BECU = nist_log_poly([-0.50015, 1.9319, -1.6954, 0.71218, 1.2788, -1.6145, 0.68722, -0.10501])


def log_grid(lo, hi, n):
    return [lo * (hi / lo) ** (i / (n - 1)) for i in range(n)]


def sample(fn, lo, hi, n=48):
    return [[round(t, 10), float("%.8g" % fn(t))] for t in log_grid(lo, hi, n)]


def sqrt_law(db_per_m_at_6ghz):
    freqs = [1e7, 5e7, 1e8, 5e8, 1e9, 2e9, 3e9, 4e9, 5e9, 6e9, 7e9, 8e9, 1e10, 1.2e10, 1.5e10, 1.8e10, 2e10]
    return [[f, float("%.6g" % (db_per_m_at_6ghz * math.sqrt(f / 6e9)))] for f in freqs]


def main():
    materials = [
        {"name": "stainless_steel_304", "extrapolation": "linear_to_zero",
         "source": "NIST cryogenic material properties, 304 stainless steel log-polynomial fit, sampled 4-300 K",
         "points": sample(SS304, 4.0, 300.0)},
        {"name": "ptfe", "extrapolation": "linear_to_zero",
         "source": "NIST cryogenic material properties, Teflon log-polynomial fit, sampled 4-300 K",
         "points": sample(PTFE, 4.0, 300.0)},
        {"name": "copper_rrr100", "extrapolation": "linear_to_zero",
         "source": "NIST cryogenic material properties, OFHC copper RRR=100 rational fit, sampled 4-300 K",
         "points": sample(CU_RRR100, 4.0, 300.0, 64)},
        {"name": "brass", "extrapolation": "linear_to_zero",
         "source": "NIST brass (UNS C26000) fit sampled 5-110 K; handbook values above 110 K",
         "points": sample(BRASS, 5.0, 110.0, 32) + [[150.0, 66.0], [200.0, 84.0], [250.0, 100.0], [300.0, 115.0]]},
        {"name": "beryllium_copper", "extrapolation": "linear_to_zero",
         "source": "NIST beryllium copper fit sampled 2-80 K; handbook values above 80 K",
         "points": sample(BECU, 2.0, 80.0, 32) + [[100.0, 42.0], [150.0, 52.0], [200.0, 62.0], [300.0, 80.0]]},
        {"name": "cupronickel_70_30", "extrapolation": "linear_to_zero",
         "source": "cryogenic handbook table for Cu-30Ni",
         "points": [[4.0, 0.45], [10.0, 1.4], [20.0, 3.2], [50.0, 7.9], [77.0, 10.5], [100.0, 12.5],
                    [150.0, 15.5], [200.0, 18.0], [300.0, 21.5]]},
        {"name": "phosphor_bronze", "extrapolation": "linear_to_zero",
         "source": "cryogenic wire supplier table for phosphor bronze",
         "points": [[4.0, 1.6], [10.0, 4.6], [20.0, 10.0], [50.0, 18.0], [80.0, 25.0], [100.0, 28.0],
                    [150.0, 35.0], [200.0, 41.0], [300.0, 48.0]]},
        {"name": "nbti", "extrapolation": "linear_to_zero",
         "source": "superconducting-state points below 4 K (three points, sqrt-T shape), normal-state table above T_c",
         "points": [[0.02, 0.0070711], [0.5, 0.035355], [4.0, 0.1], [6.0, 0.16], [10.0, 0.45], [20.0, 1.1],
                    [50.0, 2.6], [100.0, 4.2], [200.0, 6.0], [300.0, 7.2]]},
    ]

    cables = [
        {"name": "UT085-SS-SS", "center_conductor_diameter_m": 0.511e-3, "dielectric_diameter_m": 1.676e-3,
         "shield_diameter_m": 2.197e-3, "center_material": "stainless_steel_304", "dielectric_material": "ptfe",
         "outer_material": "stainless_steel_304", "attenuation_dB_per_m": sqrt_law(9.7),
         "cryo_attenuation_scale": 8.2 / 9.7, "dc_resistance_ohm_per_m": 2.85},
        {"name": "UT085-SS", "center_conductor_diameter_m": 0.511e-3, "dielectric_diameter_m": 1.676e-3,
         "shield_diameter_m": 2.197e-3, "center_material": "copper_rrr100", "dielectric_material": "ptfe",
         "outer_material": "stainless_steel_304", "attenuation_dB_per_m": sqrt_law(4.6),
         "cryo_attenuation_scale": 8.2 / 9.7, "dc_resistance_ohm_per_m": 0.35},
        {"name": "UT085-CuNi", "center_conductor_diameter_m": 0.511e-3, "dielectric_diameter_m": 1.676e-3,
         "shield_diameter_m": 2.197e-3, "center_material": "cupronickel_70_30", "dielectric_material": "ptfe",
         "outer_material": "cupronickel_70_30", "attenuation_dB_per_m": sqrt_law(7.2),
         "cryo_attenuation_scale": 8.2 / 9.7, "dc_resistance_ohm_per_m": 1.9},
        {"name": "UT085-NbTi", "center_conductor_diameter_m": 0.511e-3, "dielectric_diameter_m": 1.676e-3,
         "shield_diameter_m": 2.197e-3, "center_material": "nbti", "dielectric_material": "ptfe",
         "outer_material": "nbti", "attenuation_dB_per_m": sqrt_law(7.9),
         "cryo_attenuation_scale": 8.2 / 9.7, "dc_resistance_ohm_per_m": 0.0,
         "superconducting_transition_K": 9.2},
        {"name": "UT047-SS-SS", "center_conductor_diameter_m": 0.287e-3, "dielectric_diameter_m": 0.940e-3,
         "shield_diameter_m": 1.194e-3, "center_material": "stainless_steel_304", "dielectric_material": "ptfe",
         "outer_material": "stainless_steel_304", "attenuation_dB_per_m": sqrt_law(17.0),
         "cryo_attenuation_scale": 8.2 / 9.7, "dc_resistance_ohm_per_m": 9.3},
        {"name": "UT047-NbTi", "center_conductor_diameter_m": 0.287e-3, "dielectric_diameter_m": 0.940e-3,
         "shield_diameter_m": 1.194e-3, "center_material": "nbti", "dielectric_material": "ptfe",
         "outer_material": "nbti", "attenuation_dB_per_m": sqrt_law(13.5),
         "cryo_attenuation_scale": 8.2 / 9.7, "dc_resistance_ohm_per_m": 0.0,
         "superconducting_transition_K": 9.2},
    ]

    twisted_pairs = [
        {"name": "Cu-AWG35", "wire_material": "copper_rrr100", "wire_diameter_m": 0.1426e-3, "wires_per_pair": 2},
        {"name": "PhBr-AWG36", "wire_material": "phosphor_bronze", "wire_diameter_m": 0.127e-3, "wires_per_pair": 2},
        {"name": "NbTi-AWG36", "wire_material": "nbti", "wire_diameter_m": 0.127e-3, "wires_per_pair": 2},
    ]

    catalog = {
        "schema_version": 1,
        "units": {"temperature": "K", "conductivity": "W/(m K)", "length": "m", "frequency": "Hz",
                  "attenuation": "dB/m", "resistance": "ohm/m"},
        "materials": materials,
        "cables": cables,
        "twisted_pairs": twisted_pairs,
    }
    text = json.dumps(catalog, indent=1)
    # keep [x, y] pairs on one line
    text = re.sub(r"\[\s+([-0-9.e+]+),\s+([-0-9.e+]+)\s+\]", r"[\1, \2]", text)
    sys.stdout.write(text + "\n")


if __name__ == "__main__":
    main()
