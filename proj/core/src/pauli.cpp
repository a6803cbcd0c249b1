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

#include "gge/pauli.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <string>

#include "gge/error.hpp"

namespace gge {

namespace {

constexpr double kImagTolerance = 1e-12;

void require_qubits(const PureState &s) {
    if (s.local_dim() != 2) throw InvalidArgument("Pauli expectations need a qubit state");
}

}  // namespace

double pauli_expectation(const PureState &s, const PauliString &ops) {
    require_qubits(s);
    const std::size_t n = s.num_sites();
    std::size_t flip = 0;   // X or Y
    std::size_t phase = 0;  // Y or Z: sign from the bit value
    std::size_t num_y = 0;
    for (const auto &[site, op] : ops) {
        if (site < 1 || site > n) throw InvalidArgument("Pauli site " + std::to_string(site) + " out of range");
        const std::size_t bit = std::size_t{1} << (n - site);
        if (op != Pauli::Z) flip |= bit;
        if (op != Pauli::X) phase |= bit;
        if (op == Pauli::Y) ++num_y;
    }
    // Y = i X Z up to ordering: Y|b> = i (-1)^b |1-b>. The i^{num_y} is global.
    static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const auto amps = s.amplitudes();
    std::complex<double> acc = 0.0;
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if (amps[x] == 0.0) continue;
        const double sign = (std::popcount(x & phase) & 1u) ? -1.0 : 1.0;
        acc += std::conj(amps[x ^ flip]) * amps[x] * sign;
    }
    acc *= ipow[num_y % 4];
    if (std::abs(acc.imag()) > kImagTolerance) {
        throw NumericalError("Pauli expectation has imaginary residue " + std::to_string(acc.imag()));
    }
    return acc.real();
}

double CorrelationSet::magnetization_sq() const {
    if (one_point.empty()) return 0.0;
    const Vec3 &p = one_point.front();
    return static_cast<double>(num_sites) * (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}

const Mat3 &CorrelationSet::pair(std::size_t i, std::size_t j) const {
    auto it = two_point.find({i, j});
    if (it == two_point.end()) {
        throw InvalidArgument("missing two-point coefficients for (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    }
    return it->second;
}

CorrelationSet correlations(const PureState &s) {
    require_qubits(s);
    constexpr Pauli kAll[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    CorrelationSet c;
    c.num_sites = s.num_sites();
    for (std::size_t j = 1; j <= c.num_sites; ++j) {
        Vec3 v{};
        for (int a = 0; a < 3; ++a) v[a] = pauli_expectation(s, {{j, kAll[a]}});
        c.one_point.push_back(v);
    }
    for (std::size_t i = 1; i <= c.num_sites; ++i) {
        for (std::size_t j = i + 1; j <= c.num_sites; ++j) {
            Mat3 m{};
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) m[a][b] = pauli_expectation(s, {{i, kAll[a]}, {j, kAll[b]}});
            }
            c.two_point.emplace(std::make_pair(i, j), m);
        }
    }
    return c;
}

double single_site_purity(double px, double py, double pz) {
    return 0.5 * (1.0 + px * px + py * py + pz * pz);
}

double pair_purity(const CorrelationSet &c, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > c.one_point.size() || i == j) throw InvalidArgument("bad site pair");
    const Mat3 &m = c.pair(i, j);
    double sum = 1.0;
    for (int a = 0; a < 3; ++a) {
        sum += c.one_point[i - 1][a] * c.one_point[i - 1][a];
        sum += c.one_point[j - 1][a] * c.one_point[j - 1][a];
        for (int b = 0; b < 3; ++b) sum += m[a][b] * m[a][b];
    }
    return 0.25 * sum;
}

UniformPair uniform_pair(const CorrelationSet &c, std::size_t gap) {
    UniformPair p;
    if (c.one_point.empty()) throw InvalidArgument("empty correlation set");
    p.one_point = c.one_point.front();
    p.two_point = c.pair(1, 1 + gap);
    return p;
}

double g1_translation(double px, double py, double pz) {
    return 1.0 - px * px - py * py - pz * pz;
}

double g2_translation(const UniformPair &p, std::size_t num_sites) {
    if (num_sites <= 3) throw InvalidArgument("the translation-symmetric pair formula needs N >= 4");
    const Mat3 &m = p.two_point;
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            if (std::abs(m[a][b] - m[b][a]) > kSymmetryTolerance) {
                throw InvalidArgument("two-point coefficients are not symmetric (p^ab != p^ba)");
            }
        }
    }
    double bracket = 0.0;
    for (int a = 0; a < 3; ++a) {
        bracket += p.one_point[a] * p.one_point[a];
        bracket += 0.5 * m[a][a] * m[a][a];
    }
    bracket += m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    return 1.0 - (2.0 / 3.0) * bracket;
}

}  // namespace gge
