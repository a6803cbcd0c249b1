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

#include "gge/ed.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "gge/error.hpp"

namespace gge::ising {

namespace {

struct Hamiltonian {
    std::size_t dim;
    double lambda;
    std::vector<double> diag;
    std::vector<std::size_t> bonds;  // two-bit flip masks

    Hamiltonian(std::size_t n, double lam, Boundary boundary) : dim(std::size_t{1} << n), lambda(lam), diag(dim) {
        for (std::size_t x = 0; x < dim; ++x) {
            diag[x] = static_cast<double>(n) - 2.0 * static_cast<double>(std::popcount(x));
        }
        auto bit = [n](std::size_t site) { return std::size_t{1} << (n - site); };
        for (std::size_t i = 1; i < n; ++i) bonds.push_back(bit(i) | bit(i + 1));
        if (boundary == Boundary::Periodic) bonds.push_back(bit(n) | bit(1));
    }

    void apply(const std::vector<double> &in, std::vector<double> &out) const {
        for (std::size_t x = 0; x < dim; ++x) out[x] = diag[x] * in[x];
        if (lambda == 0.0) return;
        for (std::size_t x = 0; x < dim; ++x) {
            const double v = lambda * in[x];
            if (v == 0.0) continue;
            for (std::size_t m : bonds) out[x ^ m] += v;
        }
    }
};

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void axpy(double alpha, const std::vector<double> &x, std::vector<double> &y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

void project_parity(std::vector<double> &v, unsigned parity) {
    for (std::size_t x = 0; x < v.size(); ++x) {
        if ((static_cast<unsigned>(std::popcount(x)) & 1u) != parity) v[x] = 0.0;
    }
}

double normalize(std::vector<double> &v) {
    const double nrm = std::sqrt(dot(v, v));
    if (nrm > 0.0) {
        for (double &x : v) x /= nrm;
    }
    return nrm;
}

double expectation(const PureState &s, std::size_t i, Pauli a, std::size_t j, Pauli b) {
    return pauli_expectation(s, {{i, a}, {j, b}});
}

PureState as_state(std::size_t n, const std::vector<double> &v) {
    std::vector<Amplitude> amps(v.begin(), v.end());
    return PureState::normalized(n, 2, std::move(amps));
}

ChainCorrelators chain_correlators(const PureState &s, Boundary boundary) {
    const std::size_t n = s.num_sites();
    ChainCorrelators c;
    for (std::size_t i = 1; i <= n; ++i) c.pz += pauli_expectation(s, {{i, Pauli::Z}});
    c.pz /= static_cast<double>(n);

    const std::size_t max_dist = boundary == Boundary::Periodic ? n / 2 : n - 1;
    for (std::size_t d = 1; d <= max_dist; ++d) {
        double xx = 0.0, yy = 0.0, zz = 0.0;
        std::size_t count = 0;
        const std::size_t last = boundary == Boundary::Periodic ? n : n - d;
        for (std::size_t i = 1; i <= last; ++i) {
            const std::size_t j = (i - 1 + d) % n + 1;
            xx += expectation(s, i, Pauli::X, j, Pauli::X);
            yy += expectation(s, i, Pauli::Y, j, Pauli::Y);
            zz += expectation(s, i, Pauli::Z, j, Pauli::Z);
            ++count;
        }
        c.pxx.push_back(xx / static_cast<double>(count));
        c.pyy.push_back(yy / static_cast<double>(count));
        c.pzz.push_back(zz / static_cast<double>(count));
    }
    return c;
}

}  // namespace

SectorSolution lanczos_sector(std::size_t num_sites, double lambda, Boundary boundary, unsigned parity,
                              const EdOptions &options) {
    if (num_sites < 2 || num_sites > kMaxEdSites) {
        throw InvalidArgument("exact diagonalization supports 2 <= N <= " + std::to_string(kMaxEdSites));
    }
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidArgument("lambda must be finite and >= 0");
    if (parity > 1) throw InvalidArgument("parity must be 0 or 1");

    const Hamiltonian h(num_sites, lambda, boundary);
    std::mt19937_64 rng(0x5eed + parity);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> start(h.dim);
    for (double &x : start) x = uni(rng);
    project_parity(start, parity);
    normalize(start);

    std::vector<double> w(h.dim), hpsi(h.dim);
    for (std::size_t restart = 0; restart <= options.max_restarts; ++restart) {
        std::vector<std::vector<double>> basis{start};
        std::vector<double> alpha, beta;
        Eigen::VectorXd ritz;

        for (std::size_t j = 0; j < options.max_krylov; ++j) {
            h.apply(basis[j], w);
            project_parity(w, parity);
            const double a = dot(basis[j], w);
            alpha.push_back(a);
            axpy(-a, basis[j], w);
            if (j > 0) axpy(-beta[j - 1], basis[j - 1], w);
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto &v : basis) axpy(-dot(v, w), v, w);
            }
            const double b = std::sqrt(dot(w, w));

            const bool exhausted = b < 1e-13;
            const bool check = exhausted || j + 1 == options.max_krylov || (j + 1) % 5 == 0;
            if (check) {
                Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(alpha.data(), alpha.size());
                Eigen::VectorXd e = beta.empty() ? Eigen::VectorXd()
                                                 : Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(beta.data(), beta.size()));
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
                tri.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
                ritz = tri.eigenvectors().col(0);
                if (exhausted || std::abs(b * ritz(ritz.size() - 1)) < 0.01 * options.residual_tol) break;
            }
            beta.push_back(b);
            for (double &x : w) x /= b;
            basis.push_back(w);
        }

        std::vector<double> psi(h.dim, 0.0);
        for (Eigen::Index i = 0; i < ritz.size(); ++i) axpy(ritz(i), basis[static_cast<std::size_t>(i)], psi);
        project_parity(psi, parity);
        normalize(psi);
        h.apply(psi, hpsi);
        const double energy = dot(psi, hpsi);
        axpy(-energy, psi, hpsi);
        const double residual = std::sqrt(dot(hpsi, hpsi));
        if (residual < options.residual_tol) return {energy, residual, std::move(psi)};
        start = std::move(psi);
    }
    throw NumericalError("Lanczos did not reach residual " + std::to_string(options.residual_tol) + " for N=" +
                         std::to_string(num_sites) + ", lambda=" + std::to_string(lambda));
}

EdResult ed_ground_state(std::size_t num_sites, double lambda, Boundary boundary, const EdOptions &options) {
    SectorSolution even = lanczos_sector(num_sites, lambda, boundary, 0, options);
    SectorSolution odd = lanczos_sector(num_sites, lambda, boundary, 1, options);
    const bool even_lower = even.energy <= odd.energy;
    const SectorSolution &low = even_lower ? even : odd;

    PureState ground = as_state(num_sites, low.vector);
    ChainCorrelators chain = chain_correlators(ground, boundary);
    CorrelationSet corr = correlations(ground);

    std::optional<BrokenCorrelators> broken;
    if (options.broken && lambda > 1.0) {
        // Fix the relative sign so that <x_1> > 0 in the combination.
        const std::size_t bit1 = std::size_t{1} << (num_sites - 1);
        double overlap = 0.0;
        for (std::size_t x = 0; x < even.vector.size(); ++x) overlap += even.vector[x ^ bit1] * odd.vector[x];
        const double sign = overlap >= 0.0 ? 1.0 : -1.0;
        std::vector<double> mix(even.vector.size());
        for (std::size_t x = 0; x < mix.size(); ++x) mix[x] = even.vector[x] + sign * odd.vector[x];
        PureState state = as_state(num_sites, mix);

        std::vector<double> x_sign(num_sites + 1);
        double px = 0.0;
        double pz = 0.0;
        for (std::size_t i = 1; i <= num_sites; ++i) {
            const double xi = pauli_expectation(state, {{i, Pauli::X}});
            x_sign[i] = xi >= 0.0 ? 1.0 : -1.0;
            px += std::abs(xi);
            pz += pauli_expectation(state, {{i, Pauli::Z}});
        }
        px /= static_cast<double>(num_sites);
        const double z_sign = pz >= 0.0 ? 1.0 : -1.0;

        std::vector<double> pxz;
        const std::size_t max_dist = boundary == Boundary::Periodic ? num_sites / 2 : num_sites - 1;
        for (std::size_t d = 1; d <= max_dist; ++d) {
            double sum = 0.0;
            std::size_t count = 0;
            const std::size_t last = boundary == Boundary::Periodic ? num_sites : num_sites - d;
            for (std::size_t i = 1; i <= last; ++i) {
                const std::size_t j = (i - 1 + d) % num_sites + 1;
                sum += 0.5 * (x_sign[i] * expectation(state, i, Pauli::X, j, Pauli::Z) +
                              x_sign[j] * expectation(state, i, Pauli::Z, j, Pauli::X));
                ++count;
            }
            pxz.push_back(z_sign * sum / static_cast<double>(count));
        }
        broken = BrokenCorrelators{std::move(state), std::abs(even.energy - odd.energy), px, std::move(pxz)};
    }

    return EdResult{
        .num_sites = num_sites,
        .lambda = lambda,
        .boundary = boundary,
        .energy = low.energy,
        .residual = low.residual,
        .ground_state = std::move(ground),
        .chain = std::move(chain),
        .correlations = std::move(corr),
        .broken = std::move(broken),
    };
}

}  // namespace gge::ising
