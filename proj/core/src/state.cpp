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

#include "gge/state.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "gge/error.hpp"

namespace gge {

namespace {

constexpr std::size_t kMaxDimension = std::size_t{1} << 30;
// Rounding in a*b accumulates over the product's dimension.
constexpr double kProductNormTolerance = 1e-10;

std::size_t checked_sites(std::size_t requested, std::size_t fixed, std::string_view family) {
    if (requested != 0 && requested != fixed) {
        throw InvalidArgument(std::string(family) + " is defined on exactly " +
                              std::to_string(fixed) + " sites, got " + std::to_string(requested));
    }
    return fixed;
}

// Amplitudes given as (binary ket string, weight) pairs, normalized by `scale`.
PureState from_kets(std::size_t num_sites, std::initializer_list<std::pair<const char *, double>> kets,
                    double scale) {
    std::vector<Amplitude> amps(std::size_t{1} << num_sites);
    for (const auto &[ket, weight] : kets) {
        std::size_t index = 0;
        for (const char *c = ket; *c != '\0'; ++c) {
            index = (index << 1) | static_cast<std::size_t>(*c == '1');
        }
        amps[index] += weight * scale;
    }
    return PureState(num_sites, 2, std::move(amps));
}

PureState ghz(std::size_t n) {
    if (n < 2) throw InvalidArgument("GHZ needs at least 2 sites");
    std::vector<Amplitude> amps(hilbert_dimension(2, n));
    amps.front() = M_SQRT1_2;
    amps.back() = M_SQRT1_2;
    return PureState(n, 2, std::move(amps));
}

PureState w_state(std::size_t n) {
    if (n < 2) throw InvalidArgument("W needs at least 2 sites");
    std::vector<Amplitude> amps(hilbert_dimension(2, n));
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) amps[std::size_t{1} << j] = a;
    return PureState(n, 2, std::move(amps));
}

// Sum over all strings whose blocks of `block` sites are each constant, with
// amplitude 2^(-blocks/2).
PureState constant_blocks(std::size_t block, std::size_t blocks) {
    const std::size_t n = block * blocks;
    std::vector<Amplitude> amps(hilbert_dimension(2, n));
    const double a = std::pow(2.0, -0.5 * static_cast<double>(blocks));
    const std::size_t ones = (std::size_t{1} << block) - 1;
    for (std::size_t pattern = 0; pattern < (std::size_t{1} << blocks); ++pattern) {
        std::size_t index = 0;
        for (std::size_t b = 0; b < blocks; ++b) {
            index = (index << block) | (((pattern >> (blocks - 1 - b)) & 1u) ? ones : 0);
        }
        amps[index] = a;
    }
    return PureState(n, 2, std::move(amps));
}

PureState epr_chain(std::size_t n) {
    if (n < 2 || n % 2 != 0) throw InvalidArgument("EPR needs an even number of sites >= 2");
    return constant_blocks(2, n / 2);
}

PureState ghz_power(std::size_t block, std::size_t copies) {
    if (block < 2) throw InvalidArgument("GHZ needs at least 2 sites");
    if (copies < 1) throw InvalidArgument("GHZ_POWER needs at least one copy");
    return constant_blocks(block, copies);
}

}  // namespace

std::size_t hilbert_dimension(std::size_t local_dim, std::size_t num_sites) {
    if (local_dim < 2) throw InvalidArgument("local dimension must be >= 2");
    if (num_sites < 1) throw InvalidArgument("need at least one site");
    std::size_t dim = 1;
    for (std::size_t i = 0; i < num_sites; ++i) {
        if (dim > kMaxDimension / local_dim) {
            throw InvalidArgument("Hilbert space dimension " + std::to_string(local_dim) + "^" +
                                  std::to_string(num_sites) + " is too large");
        }
        dim *= local_dim;
    }
    return dim;
}

PureState::PureState(std::size_t num_sites, std::size_t local_dim, std::vector<Amplitude> amplitudes,
                     double norm_tolerance)
    : num_sites_(num_sites), local_dim_(local_dim), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != hilbert_dimension(local_dim, num_sites)) {
        throw InvalidArgument("expected " + std::to_string(hilbert_dimension(local_dim, num_sites)) +
                              " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    for (const auto &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw InvalidArgument("non-finite amplitude");
        }
    }
    const double n2 = norm_squared();
    if (std::abs(n2 - 1.0) > norm_tolerance) {
        throw InvariantViolation("state is not normalized: squared norm = " + std::to_string(n2));
    }
}

PureState PureState::normalized(std::size_t num_sites, std::size_t local_dim,
                                std::vector<Amplitude> amplitudes) {
    double n2 = 0.0;
    for (const auto &a : amplitudes) n2 += std::norm(a);
    if (!(n2 > 0.0)) throw InvalidArgument("cannot normalize the zero vector");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto &a : amplitudes) a *= inv;
    return PureState(num_sites, local_dim, std::move(amplitudes));
}

PureState PureState::product(std::size_t local_dim, std::span<const std::size_t> digits) {
    const std::size_t n = digits.size();
    std::vector<Amplitude> amps(hilbert_dimension(local_dim, n));
    std::size_t index = 0;
    for (std::size_t d : digits) {
        if (d >= local_dim) throw InvalidArgument("basis digit out of range");
        index = index * local_dim + d;
    }
    amps[index] = 1.0;
    return PureState(n, local_dim, std::move(amps));
}

double PureState::norm_squared() const {
    double n2 = 0.0;
    for (const auto &a : amplitudes_) n2 += std::norm(a);
    return n2;
}

SitePermutation::SitePermutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (std::size_t target : mapping_) {
        if (target < 1 || target > mapping_.size() || seen[target - 1]) {
            throw InvalidArgument("site permutation is not a bijection on 1.." +
                                  std::to_string(mapping_.size()));
        }
        seen[target - 1] = true;
    }
}

SitePermutation SitePermutation::identity(std::size_t num_sites) {
    std::vector<std::size_t> m(num_sites);
    for (std::size_t i = 0; i < num_sites; ++i) m[i] = i + 1;
    return SitePermutation(std::move(m));
}

SitePermutation SitePermutation::transposition(std::size_t num_sites, std::size_t a, std::size_t b) {
    if (a < 1 || b < 1 || a > num_sites || b > num_sites) {
        throw InvalidArgument("transposition site out of range");
    }
    std::vector<std::size_t> m(num_sites);
    for (std::size_t i = 0; i < num_sites; ++i) m[i] = i + 1;
    std::swap(m[a - 1], m[b - 1]);
    return SitePermutation(std::move(m));
}

SitePermutation SitePermutation::inverse() const {
    std::vector<std::size_t> inv(mapping_.size());
    for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i] - 1] = i + 1;
    return SitePermutation(std::move(inv));
}

StateFamily parse_state_family(std::string_view name) {
    std::string key;
    for (char c : name) key.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(c)));
    static constexpr std::pair<std::string_view, StateFamily> table[] = {
        {"GHZ", StateFamily::Ghz},   {"W", StateFamily::W},       {"EPR", StateFamily::Epr},
        {"GHZ_POWER", StateFamily::GhzPower}, {"ZHG", StateFamily::Zhg},
        {"PHI1", StateFamily::Phi1}, {"PHI2", StateFamily::Phi2}, {"PHI3", StateFamily::Phi3},
        {"CHI", StateFamily::Chi},   {"G1", StateFamily::G1},     {"EPR2", StateFamily::Epr2},
    };
    for (const auto &[tag, family] : table) {
        if (key == tag) return family;
    }
    throw InvalidArgument("unknown state family '" + std::string(name) + "'");
}

std::string_view to_string(StateFamily family) {
    switch (family) {
        case StateFamily::Ghz: return "GHZ";
        case StateFamily::W: return "W";
        case StateFamily::Epr: return "EPR";
        case StateFamily::GhzPower: return "GHZ_POWER";
        case StateFamily::Zhg: return "ZHG";
        case StateFamily::Phi1: return "PHI1";
        case StateFamily::Phi2: return "PHI2";
        case StateFamily::Phi3: return "PHI3";
        case StateFamily::Chi: return "CHI";
        case StateFamily::G1: return "G1";
        case StateFamily::Epr2: return "EPR2";
    }
    return "?";
}

PureState make_named_state(StateFamily family, std::size_t num_sites, std::optional<std::size_t> copies) {
    if (copies && family != StateFamily::GhzPower && family != StateFamily::Zhg) {
        throw InvalidArgument(std::string(to_string(family)) + " takes no copy count");
    }
    switch (family) {
        case StateFamily::Ghz: return ghz(num_sites);
        case StateFamily::W: return w_state(num_sites);
        case StateFamily::Epr: return epr_chain(num_sites);
        case StateFamily::GhzPower: return ghz_power(num_sites, copies.value_or(2));
        case StateFamily::Zhg: {
            checked_sites(num_sites, 3, "ZHG");
            if (copies && *copies != 2) throw InvalidArgument("ZHG is defined for two copies only");
            return from_kets(6, {{"000000", 1}, {"010101", 1}, {"101010", 1}, {"111111", 1}}, 0.5);
        }
        case StateFamily::Phi1:
            checked_sites(num_sites, 4, "PHI1");
            return ghz(4);
        case StateFamily::Phi2:
            checked_sites(num_sites, 4, "PHI2");
            return from_kets(4,
                             {{"1111", M_SQRT2}, {"1000", 1}, {"0100", 1}, {"0010", 1}, {"0001", 1}},
                             1.0 / std::sqrt(6.0));
        case StateFamily::Phi3:
            checked_sites(num_sites, 4, "PHI3");
            return from_kets(4, {{"1111", 1}, {"1100", 1}, {"0010", 1}, {"0001", 1}}, 0.5);
        case StateFamily::Chi:
            checked_sites(num_sites, 4, "CHI");
            return from_kets(4,
                             {{"0000", 1}, {"0011", -1}, {"0101", -1}, {"0110", 1},
                              {"1001", 1}, {"1010", 1}, {"1100", 1}, {"1111", 1}},
                             0.5 * M_SQRT1_2);
        case StateFamily::G1:
            checked_sites(num_sites, 4, "G1");
            return from_kets(4, {{"0000", 1}, {"0101", 1}, {"1010", 1}, {"1111", 1}}, 0.5);
        case StateFamily::Epr2:
            checked_sites(num_sites, 4, "EPR2");
            return epr_chain(4);
    }
    throw InvalidArgument("unknown state family");
}

PureState tensor_product(const PureState &a, const PureState &b) {
    if (a.local_dim() != b.local_dim()) {
        throw InvalidArgument("tensor product of states with different local dimensions");
    }
    const std::size_t db = b.dimension();
    hilbert_dimension(a.local_dim(), a.num_sites() + b.num_sites());
    std::vector<Amplitude> amps(a.dimension() * db);
    for (std::size_t x = 0; x < a.dimension(); ++x) {
        for (std::size_t y = 0; y < db; ++y) amps[x * db + y] = a[x] * b[y];
    }
    return PureState(a.num_sites() + b.num_sites(), a.local_dim(), std::move(amps), kProductNormTolerance);
}

PureState permute_sites(const PureState &state, const SitePermutation &p) {
    const std::size_t n = state.num_sites();
    const std::size_t q = state.local_dim();
    if (p.size() != n) {
        throw InvalidArgument("permutation acts on " + std::to_string(p.size()) + " sites, state has " +
                              std::to_string(n));
    }
    // Place value of each site in the amplitude index (site 1 most significant).
    std::vector<std::size_t> weight(n);
    std::size_t w = 1;
    for (std::size_t i = n; i-- > 0;) {
        weight[i] = w;
        w *= q;
    }
    std::vector<Amplitude> amps(state.dimension());
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t index = 0; index < state.dimension(); ++index) {
        std::size_t target = 0;
        for (std::size_t i = 0; i < n; ++i) target += digits[i] * weight[p.image(i + 1) - 1];
        amps[target] = state[index];
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
    }
    return PureState(n, q, std::move(amps));
}

}  // namespace gge
