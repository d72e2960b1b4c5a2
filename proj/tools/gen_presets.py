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
"""Writes the bundled project presets into data/presets/."""
import copy
import json
import pathlib

STAGES = ["50K", "4K", "Still", "CP", "MXC"]

REFERENCE_FRIDGE = {
    "room_temperature_K": 300.0,
    "still_flow_mol_per_s": 0.69e-3,
    "mxc_cooling_reference": {"flow_mol_per_s": 0.69e-3, "temperature_K": 0.020, "power_W": 13e-6},
    "stages": [
        {"name": "50K", "temperature_K": 35.0, "cooling_power_W": 30.0, "cable_length_above_m": 0.20},
        {"name": "4K", "temperature_K": 2.85, "cooling_power_W": 1.5, "cable_length_above_m": 0.29},
        {"name": "Still", "temperature_K": 0.882, "cooling_power_W": 40e-3, "cable_length_above_m": 0.25},
        {"name": "CP", "temperature_K": 0.082, "cooling_power_W": 200e-6, "cable_length_above_m": 0.17},
        {"name": "MXC", "temperature_K": 0.006, "cooling_power_W": 19e-6, "cable_length_above_m": 0.14},
    ],
}

# Linear response around the operating point (heater calibration).
RESPONSE = {
    "dP_dT_W_per_K": [1.0, 0.7, 0.034, 3.75e-3, 6.1e-4],
    "dT_dP_cross_K_per_W": [0.0, 0.0, 0.0, 0.0, 6.67],
}

MEASURED_COAX = {"50K": 45e-3, "4K": 1.0e-3, "Still": 4e-6, "CP": 0.4e-6, "MXC": 0.013e-6}
MEASURED_FLUX = {"50K": 56e-3, "4K": 1.2e-3, "Still": 2e-6, "CP": 0.29e-6, "MXC": 0.025e-6}
MEASURED_NBTI = {"CP": 0.29e-6, "MXC": 0.020e-6}
MEASURED_OUTPUT_SS = {"50K": 45e-3, "4K": 1.0e-3}


def attenuated(name, kind, count, cable, stage_db, extra=None, measured=None, center=None):
    line = {
        "name": name,
        "kind": kind,
        "count": count,
        "runs": [{"cable": cable, "from": "RT", "to": STAGES[-1]}],
        "components": [
            {"kind": "attenuator", "stage": s, "attenuation_dB": db}
            for s, db in zip(STAGES, stage_db) if db > 0
        ],
    }
    line["components"] += extra or []
    if center:
        line["center_thermalization"] = center
    if measured:
        line["measured_passive_W"] = measured
    return line


def drive(count, stage_db=(0, 20, 0, 20, 20), cable="UT085-SS-SS", measured=None, name="drive"):
    return attenuated(name, "drive", count, cable, stage_db, measured=measured)


def readin(count, measured=None):
    return attenuated("readin", "readin", count, "UT085-SS-SS", (0, 20, 0, 20, 20), measured=measured)


def pump(count, measured=None):
    coupler = [{"kind": "directional_coupler", "stage": "MXC", "attenuation_dB": 20}]
    return attenuated("pump", "pump", count, "UT085-SS-SS", (0, 20, 0, 10, 0), coupler, measured)


def flux(count, measured=None):
    return attenuated("flux", "flux", count, "UT085-SS-SS", (0, 20, 0, 0, 0),
                      [{"kind": "lowpass", "stage": "MXC", "attenuation_dB": 0}],
                      measured, {"CP": "never"})


def flux_nbti(count):
    line = {
        "name": "flux",
        "kind": "flux",
        "count": count,
        "runs": [
            {"cable": "UT047-SS-SS", "from": "RT", "to": "4K"},
            {"cable": "UT047-NbTi", "from": "4K", "to": "MXC"},
        ],
        "components": [{"kind": "attenuator", "stage": "4K", "attenuation_dB": 20}],
        "center_thermalization": {"Still": "always", "CP": "never"},
    }
    return line


def output_ss(count, measured=None):
    line = {"name": "output_ss", "kind": "output_ss", "count": count,
            "runs": [{"cable": "UT085-SS-SS", "from": "RT", "to": "4K"}]}
    if measured:
        line["measured_passive_W"] = measured
    return line


def output_nbti(count, measured=None, cable="UT085-NbTi"):
    line = {"name": "output_nbti", "kind": "output_nbti", "count": count,
            "runs": [{"cable": cable, "from": "4K", "to": "MXC"}],
            "center_thermalization": {"Still": "always"}}
    if measured:
        line["measured_passive_W"] = measured
    return line


def fridge(response=False):
    f = copy.deepcopy(REFERENCE_FRIDGE)
    if response:
        f["response"] = RESPONSE
    return f


RT_SHIELD = {
    "outer": "RT", "inner": "50K",
    "radius_inner_m": 0.45, "radius_outer_m": 0.5, "height_m": 1.2,
    "emissivity": 0.06, "counted_in_cooling_spec": True,
}


def fig9_inventory(measured=True):
    m = measured
    return [
        drive(50, measured=MEASURED_COAX if m else None),
        flux(50, measured=MEASURED_FLUX if m else None),
        readin(8, measured=MEASURED_COAX if m else None),
        pump(8, measured=MEASURED_COAX if m else None),
        output_ss(8, measured=MEASURED_OUTPUT_SS if m else None),
        output_nbti(8, measured=MEASURED_NBTI if m else None),
    ]


def presets():
    out = {}
    out["reference"] = {
        "schema_version": 1,
        "description": "Reference fridge with one line of each kind and the C1-C4 configurations",
        "fridge": fridge(),
        "inventory": [drive(1), flux(1), readin(1), pump(1), output_ss(1), output_nbti(1)],
        "noise": {"configurations": {
            "C1": [0, 10, 0, 20, 30], "C2": [0, 20, 0, 10, 30],
            "C3": [0, 20, 0, 20, 20], "C4": [0, 20, 10, 10, 20]}},
    }
    out["fig9"] = {
        "schema_version": 1,
        "description": "50-qubit processor: 124 lines, measured passive loads, heater response",
        "fridge": fridge(response=True),
        "inventory": fig9_inventory(),
        "signal_plan": {"passive_source": "measured", "pump_target_dBm": -65},
        "radiation": [RT_SHIELD],
        "qubits": 50,
    }
    out["asbuilt"] = {
        "schema_version": 1,
        "description": "Installed wiring of the reference fridge, predicted passive loads",
        "fridge": fridge(),
        "inventory": [drive(25), flux(25), readin(6), pump(5), output_ss(4), output_nbti(4)],
        "signal_plan": {"passive_source": "predicted"},
        "qubits": 25,
    }
    out["scaled400"] = {
        "schema_version": 1,
        "description": "Fig. 9 wiring with 0.047 inch coax and no flux current",
        "fridge": fridge(response=True),
        "inventory": fig9_inventory(),
        "signal_plan": {"passive_source": "measured", "pump_target_dBm": -65},
        "radiation": [RT_SHIELD],
        "qubits": 50,
        "scenario": {"diameter_scale": 0.047 / 0.085, "flux_current_zeroed": True},
    }
    out["outlook1000"] = {
        "schema_version": 1,
        "description": "Thin coax, superconducting flux wiring and a stronger fridge",
        "fridge": fridge(),
        "inventory": [
            drive(50, stage_db=(0, 20, 0, 13, 27)),
            flux_nbti(50),
            readin(8),
            pump(8),
            output_ss(8),
            output_nbti(8),
        ],
        "signal_plan": {"passive_source": "predicted", "pump_target_dBm": -65,
                        "flux": {"r_eff_mxc_ohm": 0.0, "r_eff_cp_ohm": 0.0}},
        "radiation": [RT_SHIELD],
        "qubits": 50,
        "scenario": {
            "diameter_scale": 0.047 / 0.085,
            "cp_temperature_K": 0.2, "cp_cooling_W": 400e-6,
            "mxc_temperature_K": 0.030, "mxc_cooling_W": 40e-6,
        },
    }
    return out


def main():
    root = pathlib.Path(__file__).resolve().parent.parent / "data" / "presets"
    root.mkdir(parents=True, exist_ok=True)
    for name, doc in presets().items():
        (root / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
