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

#include <cstddef>
#include <optional>
#include <vector>

#include "gge/pauli.hpp"
#include "gge/state.hpp"

namespace gge::ising {

enum class Boundary { Open, Periodic };

inline constexpr std::size_t kMaxEdSites = 14;

struct EdOptions {
    double residual_tol = 1e-10;
    std::size_t max_krylov = 250;
    std::size_t max_restarts = 20;
    /// Also assemble (|even> + |odd>)/sqrt(2) from the two parity sectors
    /// when lambda > 1.
    bool broken = true;
};

/// Distance-resolved correlators averaged over all translations of a pair
/// (i, i+n). Periodic chains wrap and list n = 1..N/2; open chains list
/// n = 1..N-1. Index k holds n = k + 1. Values are signed as measured.
struct ChainCorrelators {
    double pz = 0.0;
    std::vector<double> pxx, pyy, pzz;
};

struct BrokenCorrelators {
    PureState state;
    double energy_splitting = 0.0;  // E_odd - E_even, or the reverse, >= 0
    double px = 0.0;                // mean |<x_i>|
    /// Mean of <x_i z_j> and <z_i x_j> at distance n, each multiplied by
    /// sign(<x_i>) * sign(<z>) so it reads in the analytic convention
    /// (<x> > 0, <z> > 0).
    std::vector<double> pxz;
};

struct EdResult {
    std::size_t num_sites = 0;
    double lambda = 0.0;
    Boundary boundary = Boundary::Periodic;
    double energy = 0.0;
    double residual = 0.0;
    PureState ground_state;
    ChainCorrelators chain;
    CorrelationSet correlations;
    std::optional<BrokenCorrelators> broken;
};

/// Ground state of H = lambda sum x_i x_{i+1} + sum z_i on N <= 14 sites by a
/// matrix-free Lanczos solve in each parity sector (full
/// reorthogonalization, restarted until ||H psi - E psi|| < residual_tol).
/// Throws NumericalError when the iteration cap is hit.
EdResult ed_ground_state(std::size_t num_sites, double lambda, Boundary boundary, const EdOptions &options = {});

/// Ground energy and state of one parity sector (parity = popcount mod 2).
struct SectorSolution {
    double energy = 0.0;
    double residual = 0.0;
    std::vector<double> vector;
};
SectorSolution lanczos_sector(std::size_t num_sites, double lambda, Boundary boundary, unsigned parity,
                              const EdOptions &options = {});

}  // namespace gge::ising
