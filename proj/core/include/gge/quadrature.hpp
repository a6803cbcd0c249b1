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
#include <cmath>
#include <cstddef>

#include "gge/error.hpp"

namespace gge::quad {

inline constexpr std::size_t kOrder = 20;

struct Rule {
    std::array<double, kOrder> nodes;    // on [-1, 1]
    std::array<double, kOrder> weights;
};

/// Gauss-Legendre nodes and weights of order kOrder, computed once.
const Rule &gauss_legendre();

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t panels = 0;
    std::size_t evaluated = 0;
};

inline constexpr std::size_t kMaxPanels = 1u << 16;

namespace detail {

template <typename F>
double panel(F &f, double a, double b) {
    const Rule &r = gauss_legendre();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < kOrder; ++i) sum += r.weights[i] * f(mid + half * r.nodes[i]);
    return half * sum;
}

template <typename F>
void refine(F &f, double a, double b, double whole, double tol, int depth, int max_depth, Result &out) {
    const double mid = 0.5 * (a + b);
    out.evaluated += 2;
    if (out.evaluated > kMaxPanels) throw NumericalError("adaptive quadrature exceeded its panel budget");
    const double left = panel(f, a, mid);
    const double right = panel(f, mid, b);
    const double err = std::abs(left + right - whole);
    if (err <= tol) {
        out.value += left + right;
        out.error_estimate += err;
        out.panels += 2;
        return;
    }
    if (depth >= max_depth) throw NumericalError("adaptive quadrature did not converge");
    refine(f, a, mid, left, 0.5 * tol, depth + 1, max_depth, out);
    refine(f, mid, b, right, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace detail

/// Adaptive bisection on Gauss-Legendre panels: a panel is accepted when its
/// two halves agree with it to within the tolerance share of that panel.
/// Throws NumericalError past `max_depth` bisections or kMaxPanels panels.
template <typename F>
Result integrate(F &&f, double a, double b, double abs_tol, int max_depth = 60) {
    if (!(abs_tol > 0.0)) throw InvalidArgument("quadrature tolerance must be positive");
    Result out;
    const double whole = detail::panel(f, a, b);
    detail::refine(f, a, b, whole, abs_tol, 0, max_depth, out);
    return out;
}

}  // namespace gge::quad
