// Copyright 2026 The gge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>

// Reference values and closed forms the tables are checked against.
// Nothing here feeds the computed columns.

namespace gge::cli::reference {

/// E_G^(1), G(2,1), E_G^(2) for chains of N > 3 sites.
struct ChainForms {
    double e1;
    double g21;
    double e2;
};

ChainForms ghz_forms(double n);
ChainForms epr_forms(double n);
ChainForms w_forms(double n);

inline constexpr ChainForms kGhzLimit{1.0, 2.0 / 3.0, 2.0 / 3.0};
inline constexpr ChainForms kEprLimit{1.0, 0.5, 1.0};
inline constexpr ChainForms kWLimit{0.0, 0.0, 0.0};

/// E_G^(1), E_G^(2), G(2,1), E_B^(1), E_B^(2).
inline constexpr std::array<double, 5> kBlockEpr2{1.0, 7.0 / 9.0, 1.0 / 3.0, 1.0, 0.0};
inline constexpr std::array<double, 5> kBlockG1{1.0, 7.0 / 9.0, 1.0 / 3.0, 1.0, 1.0};

/// E_G^(1), E_G^(2), G(2,1), G(2,2), G(2,3).
inline constexpr std::array<double, 5> kFourQubitEpr2{1.0, 7.0 / 9.0, 1.0 / 3.0, 1.0, 1.0};
inline constexpr std::array<double, 5> kFourQubitPhi1{1.0, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0};
inline constexpr std::array<double, 5> kFourQubitPhi2{1.0, 8.0 / 9.0, 8.0 / 9.0, 8.0 / 9.0, 8.0 / 9.0};
inline constexpr std::array<double, 5> kFourQubitPhi3{1.0, 25.0 / 27.0, 7.0 / 9.0, 1.0, 1.0};
inline constexpr std::array<double, 5> kFourQubitChi{1.0, 23.0 / 27.0, 8.0 / 9.0, 1.0, 2.0 / 3.0};

inline constexpr double kBlockGhzSquared3 = 0.0;
inline constexpr double kBlockZhg3 = 6.0 / 7.0;

/// Saturation value quoted for G(2,n) at the critical point.
inline constexpr double kCriticalPairLimit = 0.675;
/// Nearest-neighbour concurrence at the critical point.
inline constexpr double kCriticalConcurrence = 0.19468;

}  // namespace gge::cli::reference
