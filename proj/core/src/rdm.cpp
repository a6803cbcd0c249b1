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

#include "gge/rdm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "gge/error.hpp"

namespace gge {

namespace {

// Index offsets contributed by every digit configuration of `sites`, first
// listed site most significant. For qubits this is a bit scatter.
std::vector<std::size_t> digit_offsets(const std::vector<std::size_t> &sites, std::size_t num_sites,
                                       std::size_t q) {
    const std::size_t m = sites.size();
    std::size_t count = 1;
    for (std::size_t i = 0; i < m; ++i) count *= q;
    std::vector<std::size_t> out(count, 0);

    if (q == 2) {
        for (std::size_t a = 0; a < count; ++a) {
            std::size_t off = 0;
            for (std::size_t k = 0; k < m; ++k) {
                const std::size_t bit = (a >> (m - 1 - k)) & 1u;
                off |= bit << (num_sites - sites[k]);
            }
            out[a] = off;
        }
        return out;
    }

    std::vector<std::size_t> weight(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t w = 1;
        for (std::size_t e = sites[k]; e < num_sites; ++e) w *= q;
        weight[k] = w;
    }
    for (std::size_t a = 0; a < count; ++a) {
        std::size_t rest = a;
        std::size_t off = 0;
        for (std::size_t k = m; k-- > 0;) {
            off += (rest % q) * weight[k];
            rest /= q;
        }
        out[a] = off;
    }
    return out;
}

}  // namespace

SiteSubset::SiteSubset(std::vector<std::size_t> sites) : sites_(std::move(sites)) {
    if (sites_.empty()) throw InvalidArgument("site subset must not be empty");
    if (sites_.front() < 1) throw InvalidArgument("site indices are 1-based");
    for (std::size_t i = 1; i < sites_.size(); ++i) {
        if (sites_[i] <= sites_[i - 1]) throw InvalidArgument("site subset must be strictly increasing");
    }
}

void SiteSubset::check_fits(std::size_t num_sites) const {
    if (sites_.back() > num_sites) {
        throw InvalidArgument("site " + std::to_string(sites_.back()) + " out of range 1.." +
                              std::to_string(num_sites));
    }
    if (sites_.size() >= num_sites) throw InvalidArgument("site subset must be a proper subset");
}

std::vector<std::size_t> SiteSubset::complement(std::size_t num_sites) const {
    std::vector<std::size_t> rest;
    rest.reserve(num_sites - std::min(num_sites, sites_.size()));
    auto it = sites_.begin();
    for (std::size_t s = 1; s <= num_sites; ++s) {
        if (it != sites_.end() && *it == s) {
            ++it;
        } else {
            rest.push_back(s);
        }
    }
    return rest;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw InvalidArgument("density matrix must be square and non-empty");
    }
    const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTolerance) {
        throw InvariantViolation("density matrix is not Hermitian (deviation " + std::to_string(asym) + ")");
    }
    const std::complex<double> tr = entries_.trace();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        throw InvariantViolation("density matrix trace is " + std::to_string(tr.real()));
    }
#ifndef NDEBUG
    check_positive();
#endif
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

void DensityMatrix::check_positive() const {
    const double lo = min_eigenvalue();
    if (lo < -kPositivityTolerance) {
        throw InvariantViolation("density matrix has negative eigenvalue " + std::to_string(lo));
    }
}

DensityMatrix reduce(const PureState &s, const SiteSubset &keep) {
    const std::size_t n = s.num_sites();
    const std::size_t q = s.local_dim();
    keep.check_fits(n);

    const auto kept = digit_offsets(keep.sites(), n, q);
    const auto traced = digit_offsets(keep.complement(n), n, q);
    const auto amps = s.amplitudes();

    // Columns of `block` are the kept-space vectors for each traced configuration.
    Eigen::MatrixXcd block(kept.size(), traced.size());
    for (std::size_t t = 0; t < traced.size(); ++t) {
        for (std::size_t a = 0; a < kept.size(); ++a) block(a, t) = amps[kept[a] + traced[t]];
    }
    Eigen::MatrixXcd rho(kept.size(), kept.size());
    rho.setZero();
    rho.selfadjointView<Eigen::Lower>().rankUpdate(block);
    rho.triangularView<Eigen::StrictlyUpper>() = rho.adjoint();
    rho /= s.norm_squared();
    return DensityMatrix(std::move(rho));
}

double purity(const DensityMatrix &rho) {
    return rho.entries().squaredNorm();
}

double linear_entropy(double purity, std::size_t dim_kept, std::size_t dim_traced) {
    const std::size_t d = std::min(dim_kept, dim_traced);
    if (d < 2) throw InvalidArgument("linear entropy needs both dimensions >= 2");
    constexpr double kEdge = 1e-12;
    if (!(purity >= -kEdge && purity <= 1.0 + kEdge)) throw InvalidArgument("purity outside [0, 1]");
    const double dd = static_cast<double>(d);
    const double value = dd / (dd - 1.0) * (1.0 - std::clamp(purity, 0.0, 1.0));
    return std::clamp(value, 0.0, 1.0 + kEdge);
}

double subset_linear_entropy(const PureState &s, const SiteSubset &keep) {
    const DensityMatrix rho = reduce(s, keep);
    const std::size_t dim_traced = s.dimension() / rho.dim();
    return linear_entropy(purity(rho), rho.dim(), dim_traced);
}

}  // namespace gge
