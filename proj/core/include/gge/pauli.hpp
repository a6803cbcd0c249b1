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
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gge/state.hpp"

namespace gge {

enum class Pauli { X = 0, Y = 1, Z = 2 };

/// Site (1-based) -> Pauli label.
using PauliString = std::map<std::size_t, Pauli>;

/// <s| (x)_k sigma_k |s> for a qubit state, applied matrix-free. Throws
/// InvalidArgument for non-qubit states or bad sites, NumericalError if the
/// result has an imaginary residue above 1e-12.
double pauli_expectation(const PureState &s, const PauliString &ops);

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;  // [alpha][beta], alpha on the lower site

/// One- and two-point Pauli expectations of a qubit state.
struct CorrelationSet {
    std::size_t num_sites = 0;
    std::vector<Vec3> one_point;                          // index site-1
    std::map<std::pair<std::size_t, std::size_t>, Mat3> two_point;  // keys (i, j), i < j

    /// N * (px^2 + py^2 + pz^2) using site 1; meaningful for uniform states.
    double magnetization_sq() const;
    const Mat3 &pair(std::size_t i, std::size_t j) const;
};

/// Every one-point value and every pair's 3x3 block.
CorrelationSet correlations(const PureState &s);

/// Tr(rho_j^2) = (1 + px^2 + py^2 + pz^2) / 2.
double single_site_purity(double px, double py, double pz);

/// Tr(rho_ij^2) = (1/4) sum over alpha, beta in {0,x,y,z} of p^{alpha beta}^2.
double pair_purity(const CorrelationSet &c, std::size_t i, std::size_t j);

/// Coefficients of a translation-invariant pair at a fixed gap.
struct UniformPair {
    Vec3 one_point{};  // px, py, pz
    Mat3 two_point{};  // p^{alpha beta}
};

/// Reads sites (1, 1+gap) of `c`.
UniformPair uniform_pair(const CorrelationSet &c, std::size_t gap);

/// 1 - px^2 - py^2 - pz^2.
double g1_translation(double px, double py, double pz);

inline constexpr double kSymmetryTolerance = 1e-10;

/// Pair class value for translation-symmetric states,
/// 1 - (2/3)[sum p_a^2 + sum_{a<b} p_ab^2 + sum_a p_aa^2 / 2].
/// Requires num_sites >= 4 and p_ab = p_ba (1e-10); InvalidArgument otherwise.
double g2_translation(const UniformPair &p, std::size_t num_sites);

}  // namespace gge
