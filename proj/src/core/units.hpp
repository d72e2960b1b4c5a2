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

#ifndef CRYOBUDGET_CORE_UNITS_HPP
#define CRYOBUDGET_CORE_UNITS_HPP

#include <cmath>

namespace cryo {

// CODATA 2018 exact values.
inline constexpr double kPlanck = 6.62607015e-34;          // J s
inline constexpr double kHbar = kPlanck / (2.0 * 3.14159265358979323846);
inline constexpr double kBoltzmann = 1.380649e-23;         // J/K
inline constexpr double kStefanBoltzmann = 5.670374419e-8;  // W m^-2 K^-4
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kRoomTemperature = 300.0;           // K

inline double db_to_ratio(double db) { return std::pow(10.0, db / 10.0); }
inline double ratio_to_db(double ratio) { return 10.0 * std::log10(ratio); }
inline double dbm_to_watts(double dbm) { return 1e-3 * db_to_ratio(dbm); }
inline double watts_to_dbm(double watts) { return ratio_to_db(watts / 1e-3); }

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_UNITS_HPP
