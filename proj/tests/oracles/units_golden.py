# uavcovert - covert link planning for UAV-assisted satellite downlinks
# Copyright (C) 2026 The uavcovert authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

"""Writes data/units_golden.csv: engineering-unit values and their SI equivalents.

Run from the repository root with: python3 tests/oracles/units_golden.py
"""
import mpmath as mp

mp.mp.dps = 40

ROWS = [
    ("sigma_kappa2", "-114", "dBm", "power"),
    ("sigma_b2", "-104", "dBm", "power"),
    ("sigma_w2", "-104", "dBm", "power"),
    ("p_tot", "1", "W", "power"),
    ("pa_max", "10", "W", "power"),
    ("reference_0dBm", "0", "dBm", "power"),
    ("reference_30dBm", "30", "dBm", "power"),
    ("reference_10dBW", "10", "dBW", "power"),
    ("reference_100mW", "100", "mW", "power"),
    ("beta0_chi", "-38.5", "dB", "gain"),
    ("beta0_kappa", "-60", "dB", "gain"),
    ("antenna_gain", "30", "dBi", "gain"),
    ("carrier_frequency", "2", "GHz", "frequency"),
    ("reference_915MHz", "915", "MHz", "frequency"),
    ("satellite_distance", "500", "km", "length"),
    ("h_min", "50", "m", "length"),
    ("h_max", "500", "m", "length"),
    ("phi_min", "50", "deg", "angle"),
    ("reference_90deg", "90", "deg", "angle"),
    ("r_tg", "6", "bps/Hz", "rate"),
    ("eps", "0.01", "1", "ratio"),
]

CONVERT = {
    "dBm": lambda v: 10 ** ((v - 30) / 10),
    "dBW": lambda v: 10 ** (v / 10),
    "W": lambda v: v,
    "mW": lambda v: v / 1000,
    "dB": lambda v: 10 ** (v / 10),
    "dBi": lambda v: 10 ** (v / 10),
    "GHz": lambda v: v * 10**9,
    "MHz": lambda v: v * 10**6,
    "km": lambda v: v * 1000,
    "m": lambda v: v,
    "deg": lambda v: v * mp.pi / 180,
    "bps/Hz": lambda v: v,
    "1": lambda v: v,
}

with open("data/units_golden.csv", "w") as f:
    f.write("quantity,dimension,value,unit,si_value\n")
    for name, value, unit, dim in ROWS:
        si = CONVERT[unit](mp.mpf(value))
        f.write(f"{name},{dim},{value},{unit},{mp.nstr(si, 17)}\n")
