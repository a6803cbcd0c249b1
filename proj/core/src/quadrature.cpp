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

#include "gge/quadrature.hpp"

#include <cmath>

namespace gge::quad {

namespace {

Rule build_rule() {
    Rule r{};
    constexpr std::size_t n = kOrder;
    for (std::size_t i = 0; i < n; ++i) {
        // Newton on P_n starting from the Chebyshev-like guess.
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

}  // namespace

const Rule &gauss_legendre() {
    static const Rule rule = build_rule();
    return rule;
}

}  // namespace gge::quad
