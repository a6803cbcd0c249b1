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

#include <cmath>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "gge/error.hpp"
#include "gge/state.hpp"
#include "oracle_values.hpp"
#include "random_states.hpp"

using namespace gge;

namespace {

void expect_amplitudes_near(const PureState &a, const PureState &b, double tol) {
    ASSERT_EQ(a.num_sites(), b.num_sites());
    ASSERT_EQ(a.local_dim(), b.local_dim());
    for (std::size_t i = 0; i < a.dimension(); ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, tol) << "index " << i;
}

std::size_t index_of(const char *ket) {
    std::size_t index = 0;
    for (const char *c = ket; *c; ++c) index = (index << 1) | static_cast<std::size_t>(*c == '1');
    return index;
}

}  // namespace

TEST(PureState, RejectsWrongLength) {
    EXPECT_THROW(PureState(2, 2, std::vector<Amplitude>(3, 0.5)), InvalidArgument);
}

TEST(PureState, RejectsUnnormalized) {
    EXPECT_THROW(PureState(1, 2, {1.0, 1.0}), InvariantViolation);
}

TEST(PureState, RejectsBadLocalDimension) {
    EXPECT_THROW(PureState(1, 1, {1.0}), InvalidArgument);
    EXPECT_THROW(PureState(0, 2, {1.0}), InvalidArgument);
}

TEST(PureState, NormalizedRescales) {
    PureState s = PureState::normalized(1, 2, {3.0, 4.0});
    EXPECT_DOUBLE_EQ(s[0].real(), 0.6);
    EXPECT_DOUBLE_EQ(s[1].real(), 0.8);
    EXPECT_THROW(PureState::normalized(1, 2, {0.0, 0.0}), InvalidArgument);
}

TEST(PureState, ProductState) {
    const std::size_t digits[] = {0, 2, 1};
    PureState s = PureState::product(3, digits);
    EXPECT_EQ(s.dimension(), 27u);
    EXPECT_EQ(s[0 * 9 + 2 * 3 + 1], Amplitude(1.0));
    const std::size_t bad[] = {0, 3};
    EXPECT_THROW(PureState::product(3, bad), InvalidArgument);
}

TEST(HilbertDimension, CapsLargeSpaces) {
    EXPECT_EQ(hilbert_dimension(2, 20), std::size_t{1} << 20);
    EXPECT_THROW(hilbert_dimension(2, 64), InvalidArgument);
}

TEST(NamedState, GhzTwo) {
    PureState s = make_named_state(StateFamily::Ghz, 2);
    EXPECT_DOUBLE_EQ(s[0].real(), 1.0 / std::sqrt(2.0));
    EXPECT_EQ(s[1], Amplitude(0.0));
    EXPECT_EQ(s[2], Amplitude(0.0));
    EXPECT_DOUBLE_EQ(s[3].real(), 1.0 / std::sqrt(2.0));
}

TEST(NamedState, WThree) {
    PureState s = make_named_state(StateFamily::W, 3);
    for (std::size_t i = 0; i < 8; ++i) {
        const double expected = (i == 1 || i == 2 || i == 4) ? 1.0 / std::sqrt(3.0) : 0.0;
        EXPECT_DOUBLE_EQ(s[i].real(), expected) << i;
    }
}

TEST(NamedState, ChiSigns) {
    PureState s = make_named_state(StateFamily::Chi, 4);
    const double a = 1.0 / (2.0 * std::sqrt(2.0));
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 16; ++i) {
        if (s[i] == Amplitude(0.0)) continue;
        ++nonzero;
        const bool negative = i == index_of("0011") || i == index_of("0101");
        EXPECT_NEAR(s[i].real(), negative ? -a : a, 1e-16) << i;
    }
    EXPECT_EQ(nonzero, 8u);
}

TEST(NamedState, FactoryStatesAreNormalizedAndReal) {
    const std::pair<StateFamily, std::size_t> cases[] = {
        {StateFamily::Ghz, 5},  {StateFamily::W, 7},    {StateFamily::Epr, 8},  {StateFamily::GhzPower, 3},
        {StateFamily::Zhg, 0},  {StateFamily::Phi1, 0}, {StateFamily::Phi2, 4}, {StateFamily::Phi3, 0},
        {StateFamily::Chi, 0},  {StateFamily::G1, 0},   {StateFamily::Epr2, 0},
    };
    for (const auto &[family, n] : cases) {
        PureState s = make_named_state(family, n);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12) << to_string(family);
        for (const Amplitude &a : s.amplitudes()) EXPECT_LT(std::abs(a.imag()), 1e-15);
    }
}

TEST(NamedState, SizeErrors) {
    EXPECT_THROW(make_named_state(StateFamily::Epr, 5), InvalidArgument);
    EXPECT_THROW(make_named_state(StateFamily::Ghz, 1), InvalidArgument);
    EXPECT_THROW(make_named_state(StateFamily::Chi, 5), InvalidArgument);
    EXPECT_THROW(make_named_state(StateFamily::G1, 3), InvalidArgument);
    EXPECT_THROW(make_named_state(StateFamily::Zhg, 4), InvalidArgument);
    EXPECT_THROW(make_named_state(StateFamily::Zhg, 3, 3), InvalidArgument);
    EXPECT_THROW(make_named_state(StateFamily::W, 3, 2), InvalidArgument);
    EXPECT_THROW(make_named_state(StateFamily::GhzPower, 3, 0), InvalidArgument);
}

TEST(NamedState, ParseNames) {
    EXPECT_EQ(parse_state_family("ghz"), StateFamily::Ghz);
    EXPECT_EQ(parse_state_family("ghz-power"), StateFamily::GhzPower);
    EXPECT_EQ(parse_state_family("Phi3"), StateFamily::Phi3);
    EXPECT_EQ(parse_state_family("EPR2"), StateFamily::Epr2);
    EXPECT_THROW(parse_state_family("bell"), InvalidArgument);
    for (auto f : {StateFamily::Ghz, StateFamily::Zhg, StateFamily::Chi, StateFamily::G1}) {
        EXPECT_EQ(parse_state_family(to_string(f)), f);
    }
}

TEST(TensorProduct, BasisStates) {
    const std::size_t zero[] = {0};
    PureState a = PureState::product(2, zero);
    PureState ab = tensor_product(a, a);
    EXPECT_EQ(ab.num_sites(), 2u);
    EXPECT_EQ(ab[0], Amplitude(1.0));
}

TEST(TensorProduct, GhzSquared) {
    PureState g = make_named_state(StateFamily::Ghz, 3);
    PureState gg = tensor_product(g, g);
    for (std::size_t i = 0; i < 64; ++i) {
        const bool on = i == index_of("000000") || i == index_of("000111") || i == index_of("111000") ||
                        i == index_of("111111");
        EXPECT_NEAR(gg[i].real(), on ? 0.5 : 0.0, 1e-15) << i;
    }
    expect_amplitudes_near(gg, make_named_state(StateFamily::GhzPower, 3, 2), 1e-15);
}

TEST(TensorProduct, BellPairIsEpr2) {
    PureState bell = make_named_state(StateFamily::Epr, 2);
    expect_amplitudes_near(tensor_product(bell, bell), make_named_state(StateFamily::Epr2), 1e-15);
}

TEST(TensorProduct, MismatchedDimension) {
    const std::size_t zero[] = {0};
    EXPECT_THROW(tensor_product(PureState::product(2, zero), PureState::product(3, zero)), InvalidArgument);
}

TEST(TensorProduct, AssociativeOnDyadicStates) {
    const std::size_t d0[] = {0, 1};
    PureState a = make_named_state(StateFamily::Ghz, 2);
    PureState b = PureState::product(2, d0);
    PureState c = make_named_state(StateFamily::Epr2);
    EXPECT_EQ(tensor_product(tensor_product(a, b), c), tensor_product(a, tensor_product(b, c)));
}

TEST(TensorProduct, AssociativeOnRandomStates) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        PureState a = fixtures::random_state(rng, 2), b = fixtures::random_state(rng, 3), c = fixtures::random_state(rng, 2);
        expect_amplitudes_near(tensor_product(tensor_product(a, b), c), tensor_product(a, tensor_product(b, c)), 1e-15);
    }
}

TEST(SitePermutation, Validation) {
    EXPECT_THROW(SitePermutation({1, 1, 2}), InvalidArgument);
    EXPECT_THROW(SitePermutation({0, 1}), InvalidArgument);
    EXPECT_THROW(SitePermutation({1, 3}), InvalidArgument);
    EXPECT_THROW(SitePermutation::transposition(3, 1, 4), InvalidArgument);
    SitePermutation p({2, 3, 1});
    SitePermutation inv = p.inverse();
    for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(inv.image(p.image(i)), i);
}

TEST(PermuteSites, GhzSquaredToZhg) {
    PureState gg = make_named_state(StateFamily::GhzPower, 3, 2);
    PureState z = permute_sites(gg, SitePermutation::transposition(6, 2, 5));
    for (const char *ket : {"000000", "010101", "101010", "111111"}) EXPECT_EQ(z[index_of(ket)], Amplitude(0.5));
    EXPECT_EQ(z, make_named_state(StateFamily::Zhg));
}

TEST(PermuteSites, IdentityIsBitIdentical) {
    std::mt19937_64 rng(3);
    PureState s = fixtures::random_state(rng, 5);
    EXPECT_EQ(permute_sites(s, SitePermutation::identity(5)), s);
}

TEST(PermuteSites, Epr2SwapIsG1) {
    ASSERT_EQ(oracle::kEpr2Swap23MatchesG1, 1.0);
    PureState s = permute_sites(make_named_state(StateFamily::Epr2), SitePermutation::transposition(4, 2, 3));
    EXPECT_EQ(s, make_named_state(StateFamily::G1));
}

TEST(PermuteSites, InverseRestoresExactly) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        PureState s = fixtures::random_state(rng, 6);
        SitePermutation p = fixtures::random_permutation(rng, 6);
        EXPECT_EQ(permute_sites(permute_sites(s, p), p.inverse()), s);
    }
    PureState q = fixtures::random_state(rng, 3, 3);
    SitePermutation p({3, 1, 2});
    EXPECT_EQ(permute_sites(permute_sites(q, p), p.inverse()), q);
}

TEST(PermuteSites, MovesDigits) {
    const std::size_t digits[] = {1, 0, 0};
    PureState s = PureState::product(2, digits);
    PureState t = permute_sites(s, SitePermutation({3, 1, 2}));
    EXPECT_EQ(t[index_of("001")], Amplitude(1.0));
}

TEST(PermuteSites, LengthMismatch) {
    EXPECT_THROW(permute_sites(make_named_state(StateFamily::Ghz, 3), SitePermutation::identity(4)), InvalidArgument);
}

TEST(StateFile, RoundTrip) {
    PureState g = make_named_state(StateFamily::Ghz, 2);
    EXPECT_EQ(read_state_file(write_state_file(g)), g);
    std::mt19937_64 rng(9);
    PureState r = fixtures::random_state(rng, 4);
    EXPECT_EQ(read_state_file(write_state_file(r)), r);
}

TEST(StateFile, RejectsBadNorm) {
    const std::string text =
        R"({"version":1,"num_sites":1,"local_dim":2,"amplitudes":[[0.5,0],[0.5,0]]})";
    EXPECT_THROW(read_state_file(text), InvariantViolation);
}

TEST(StateFile, AcceptsWithinFileTolerance) {
    const std::string text =
        R"({"version":1,"num_sites":1,"local_dim":2,"amplitudes":[[1.0000000001,0],[0,0]]})";
    PureState s = read_state_file(text);
    EXPECT_EQ(s[0].real(), 1.0000000001);
}

TEST(StateFile, Qutrit) {
    const std::string text =
        R"({"version":1,"num_sites":2,"local_dim":3,"amplitudes":[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})";
    PureState s = read_state_file(text);
    EXPECT_EQ(s.local_dim(), 3u);
    EXPECT_EQ(s.dimension(), 9u);
    EXPECT_EQ(s[0], Amplitude(1.0));
}

TEST(StateFile, Malformed) {
    EXPECT_THROW(read_state_file("not json"), InvalidArgument);
    EXPECT_THROW(read_state_file(R"({"version":2,"num_sites":1,"local_dim":2,"amplitudes":[[1,0],[0,0]]})"),
                 InvalidArgument);
    EXPECT_THROW(read_state_file(R"({"version":1,"num_sites":1,"local_dim":2})"), InvalidArgument);
    EXPECT_THROW(read_state_file(R"({"version":1,"num_sites":1,"local_dim":2,"amplitudes":[[1,0]]})"),
                 InvalidArgument);
    EXPECT_THROW(read_state_file(R"({"version":1,"num_sites":1,"local_dim":2,"amplitudes":[[1],[0,0]]})"),
                 InvalidArgument);
    EXPECT_THROW(read_state_file(R"({"version":1,"num_sites":1,"local_dim":2,"amplitudes":[["a",0],[0,0]]})"),
                 InvalidArgument);
}
