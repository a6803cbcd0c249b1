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
#include <vector>

#include <Eigen/Dense>

#include "gge/state.hpp"

namespace gge {

/// Strictly increasing, non-empty list of 1-based site indices.
class SiteSubset {
  public:
    explicit SiteSubset(std::vector<std::size_t> sites);

    const std::vector<std::size_t> &sites() const { return sites_; }
    std::size_t size() const { return sites_.size(); }

    /// Throws InvalidArgument unless every site is in 1..num_sites and the
    /// subset is proper.
    void check_fits(std::size_t num_sites) const;

    /// The remaining sites of a chain of `num_sites`.
    std::vector<std::size_t> complement(std::size_t num_sites) const;

    bool operator==(const SiteSubset &) const = default;

  private:
    std::vector<std::size_t> sites_;
};

/// Reduced state of a site subset. Hermitian and unit trace (1e-12) are checked
/// on construction; positivity only in debug builds or via check_positive().
class DensityMatrix {
  public:
    static constexpr double kHermitianTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-12;
    static constexpr double kPositivityTolerance = 1e-10;

    explicit DensityMatrix(Eigen::MatrixXcd entries);

    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXcd &entries() const { return entries_; }

    double min_eigenvalue() const;
    /// Throws InvariantViolation when the smallest eigenvalue is below -1e-10.
    void check_positive() const;

  private:
    Eigen::MatrixXcd entries_;
};

/// Partial trace of |s><s| over every site not in `keep`.
DensityMatrix reduce(const PureState &s, const SiteSubset &keep);

/// Tr(rho^2), evaluated as the squared Frobenius norm.
double purity(const DensityMatrix &rho);

/// (d/(d-1)) * (1 - purity) with d = min(dim_kept, dim_traced), clamped into
/// [0, 1] when within 1e-12 of either end.
double linear_entropy(double purity, std::size_t dim_kept, std::size_t dim_traced);

/// Convenience: linear entropy of the bipartition (keep | rest) of s.
double subset_linear_entropy(const PureState &s, const SiteSubset &keep);

}  // namespace gge
