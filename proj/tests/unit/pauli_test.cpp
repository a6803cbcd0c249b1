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

#include <gtest/gtest.h>

#include "gge/error.hpp"
#include "gge/measure.hpp"
#include "gge/pauli.hpp"
#include "oracle_values.hpp"
#include "random_states.hpp"

using namespace gge;

TEST(PauliExpectation, Basics) {
    const std::size_t zero[] = {0};
    EXPECT_DOUBLE_EQ(pauli_expectation(PureState::product(2, zero), {{1, Pauli::Z}}), 1.0);
    PureState bell = make_named_state(StateFamily::Epr, 2);
    EXPECT_NEAR(pauli_expectation(bell, {{1, Pauli::X}, {2, Pauli::X}}), 1.0, 1e-15);
    EXPECT_NEAR(pauli_expectation(bell, {{1, Pauli::Y}, {2, Pauli::Y}}), -1.0, 1e-15);
    EXPECT_NEAR(pauli_expectation(make_named_state(StateFamily::Ghz, 5), {{3, Pauli::X}}), oracle::kGhz5SigmaX,
                1e-15);
}

TEST(PauliExpectation, YPhase) {
    // (|0> + i|1>)/sqrt(2) is the +1 eigenstate of Y.
    PureState s = PureState::normalized(1, 2, {1.0, Amplitude(0.0, 1.0)});
    EXPECT_NEAR(pauli_expectation(s, {{1, Pauli::Y}}), 1.0, 1e-15);
}

TEST(PauliExpectation, Errors) {
    const std::size_t zero[] = {0};
    EXPECT_THROW(pauli_expectation(PureState::product(3, zero), {{1, Pauli::Z}}), InvalidArgument);
    EXPECT_THROW(pauli_expectation(make_named_state(StateFamily::Ghz, 3), {{4, Pauli::Z}}), InvalidArgument);
    EXPECT_THROW(pauli_expectation(make_named_state(StateFamily::Ghz, 3), {{0, Pauli::Z}}), InvalidArgument);
}

TEST(PauliExpectation, RealOnRandomStates) {
    std::mt19937_64 rng(91);
    PureState s = fixtures::random_state(rng, 5);
    for (Pauli a : {Pauli::X, Pauli::Y, Pauli::Z}) {
        for (Pauli b : {Pauli::X, Pauli::Y, Pauli::Z}) {
            EXPECT_NO_THROW(pauli_expectation(s, {{1, a}, {4, b}, {5, Pauli::Y}}));
        }
    }
}

TEST(SingleSitePurity, Examples) {
    EXPECT_DOUBLE_EQ(single_site_purity(0, 0, 0), 0.5);
    EXPECT_DOUBLE_EQ(single_site_purity(1, 0, 0), 1.0);
    EXPECT_NEAR(single_site_purity(0, 0, 1.0 / 3.0), 5.0 / 9.0, 1e-15);
    CorrelationSet c = correlations(make_named_state(StateFamily::W, 3));
    EXPECT_NEAR(c.one_point[0][2], 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(2.0 * (1.0 - single_site_purity(c.one_point[0][0], c.one_point[0][1], c.one_point[0][2])), 8.0 / 9.0,
                1e-15);
}

TEST(PairPurity, Examples) {
    CorrelationSet zero;
    zero.num_sites = 2;
    zero.one_point.assign(2, Vec3{});
    zero.two_point[{1, 2}] = Mat3{};
    EXPECT_DOUBLE_EQ(pair_purity(zero, 1, 2), 0.25);

    CorrelationSet bell = correlations(make_named_state(StateFamily::Epr, 2));
    EXPECT_NEAR(pair_purity(bell, 1, 2), 1.0, 1e-15);

    CorrelationSet ghz = correlations(make_named_state(StateFamily::Ghz, 4));
    EXPECT_NEAR(pair_purity(ghz, 1, 2), oracle::kGhz4PairPurity, 1e-15);
    EXPECT_NEAR(pair_purity(ghz, 1, 2), 0.5, 1e-15);

    CorrelationSet missing;
    missing.num_sites = 3;
    missing.one_point.assign(3, Vec3{});
    EXPECT_THROW(pair_purity(missing, 1, 2), InvalidArgument);
    EXPECT_THROW(pair_purity(ghz, 2, 2), InvalidArgument);
}

TEST(Translation, G1) {
    EXPECT_DOUBLE_EQ(g1_translation(0, 0, 0), 1.0);
    EXPECT_DOUBLE_EQ(g1_translation(0, 0, 1), 0.0);
}

TEST(Translation, G2Ghz) {
    for (std::size_t n : {4u, 6u}) {
        PureState s = make_named_state(StateFamily::Ghz, n);
        UniformPair p = uniform_pair(correlations(s), 1);
        EXPECT_NEAR(p.two_point[2][2], 1.0, 1e-15);
        EXPECT_NEAR(g2_translation(p, n), 2.0 / 3.0, 1e-12);
    }
}

TEST(Translation, G2Errors) {
    UniformPair p;
    EXPECT_THROW(g2_translation(p, 3), InvalidArgument);
    p.two_point[0][2] = 0.3;
    EXPECT_THROW(g2_translation(p, 6), InvalidArgument);
}

TEST(Translation, AgreesWithRdm) {
    for (std::size_t n : {4u, 5u, 7u}) {
        for (StateFamily f : {StateFamily::Ghz, StateFamily::W}) {
            PureState s = make_named_state(f, n);
            CorrelationSet c = correlations(s);
            EXPECT_NEAR(g1_translation(c.one_point[0][0], c.one_point[0][1], c.one_point[0][2]), e_g(s, 1), 1e-10);
            for (std::size_t gap = 1; gap < n; ++gap) {
                EXPECT_NEAR(g2_translation(uniform_pair(c, gap), n), g_measure(s, GapVector(n, {gap})), 1e-10)
                    << to_string(f) << n << " gap " << gap;
            }
        }
    }
}

TEST(Correlations, Magnetization) {
    CorrelationSet c = correlations(make_named_state(StateFamily::W, 3));
    EXPECT_NEAR(c.magnetization_sq(), 3.0 / 9.0, 1e-15);
    EXPECT_EQ(c.two_point.size(), 3u);
}

TEST(PauliProperties, PurityPathwaysAgree) {
    std::mt19937_64 rng(93);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 4 + static_cast<std::size_t>(trial) % 5;
        PureState s = fixtures::random_state(rng, n);
        CorrelationSet c = correlations(s);
        for (std::size_t i = 1; i <= n; ++i) {
            const Vec3 &p = c.one_point[i - 1];
            EXPECT_NEAR(single_site_purity(p[0], p[1], p[2]), purity(reduce(s, SiteSubset({i}))), 1e-10);
            for (std::size_t j = i + 1; j <= n; ++j) {
                EXPECT_NEAR(pair_purity(c, i, j), purity(reduce(s, SiteSubset({i, j}))), 1e-10);
            }
        }
    }
}
