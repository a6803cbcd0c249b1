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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gge {

using Amplitude = std::complex<double>;

/// Normalized pure state of `num_sites` sites, each of dimension `local_dim`.
///
/// Amplitudes are indexed in base `local_dim` with site 1 as the most
/// significant digit, so the ket |d1 d2 ... dN> lives at index
/// d1*q^(N-1) + ... + dN. Values are immutable once constructed.
class PureState {
  public:
    static constexpr double kNormTolerance = 1e-12;

    /// Throws InvalidArgument on a length mismatch and InvariantViolation when
    /// the squared norm is farther than `norm_tolerance` from one.
    PureState(std::size_t num_sites, std::size_t local_dim, std::vector<Amplitude> amplitudes,
              double norm_tolerance = kNormTolerance);

    /// Rescales `amplitudes` to unit norm first. Rejects the zero vector.
    static PureState normalized(std::size_t num_sites, std::size_t local_dim,
                                std::vector<Amplitude> amplitudes);

    /// Product of computational basis states, one digit per site.
    static PureState product(std::size_t local_dim, std::span<const std::size_t> digits);

    std::size_t num_sites() const { return num_sites_; }
    std::size_t local_dim() const { return local_dim_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    const Amplitude &operator[](std::size_t index) const { return amplitudes_[index]; }
    double norm_squared() const;

    bool operator==(const PureState &other) const = default;

  private:
    std::size_t num_sites_;
    std::size_t local_dim_;
    std::vector<Amplitude> amplitudes_;
};

/// q^n, throwing InvalidArgument if the Hilbert space would be unreasonably large.
std::size_t hilbert_dimension(std::size_t local_dim, std::size_t num_sites);

/// Bijection on sites 1..N. `image(i)` is where the content of site i ends up.
class SitePermutation {
  public:
    explicit SitePermutation(std::vector<std::size_t> mapping);

    static SitePermutation identity(std::size_t num_sites);
    /// Exchanges two sites (1-based) and leaves the rest in place.
    static SitePermutation transposition(std::size_t num_sites, std::size_t a, std::size_t b);

    std::size_t size() const { return mapping_.size(); }
    std::size_t image(std::size_t site) const { return mapping_.at(site - 1); }
    const std::vector<std::size_t> &mapping() const { return mapping_; }
    SitePermutation inverse() const;

  private:
    std::vector<std::size_t> mapping_;
};

enum class StateFamily { Ghz, W, Epr, GhzPower, Zhg, Phi1, Phi2, Phi3, Chi, G1, Epr2 };

/// Accepts the canonical tag (GHZ, W, EPR, GHZ_POWER, ZHG, PHI1, PHI2, PHI3,
/// CHI, G1, EPR2), case-insensitively, with '-' allowed for '_'.
StateFamily parse_state_family(std::string_view name);
std::string_view to_string(StateFamily family);

/// Builds one of the named multi-qubit states from exact literals.
///
/// `num_sites` is the chain length for GHZ/W/EPR and the block length for
/// GHZ_POWER (total length num_sites*copies). Fixed-size families (PHI1..3,
/// CHI, G1, EPR2 with four sites; ZHG with two three-site blocks) accept 0 for
/// "default" or their fixed value. Violations throw InvalidArgument.
PureState make_named_state(StateFamily family, std::size_t num_sites = 0,
                           std::optional<std::size_t> copies = std::nullopt);

/// Kronecker product; the sites of `a` come first.
PureState tensor_product(const PureState &a, const PureState &b);

/// Moves the digit at site i to site p.image(i).
PureState permute_sites(const PureState &state, const SitePermutation &p);

/// JSON state document: {"version":1,"num_sites":N,"local_dim":q,
/// "amplitudes":[[re,im],...]}. Reading re-checks the norm against 1e-9 and
/// never renormalizes.
PureState read_state_file(std::string_view text);
std::string write_state_file(const PureState &state);

inline constexpr double kStateFileNormTolerance = 1e-9;

}  // namespace gge
