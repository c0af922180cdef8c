// Copyright 2026 The hdfusion Authors
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
#include "hdfusion/optics.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "hdfusion/protocols.hpp"
#include "oracles.hpp"

using namespace hdfusion;

TEST(Optics, RejectsNonUnitary) {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(0, 1) = 0.1;
    EXPECT_THROW(ModeUnitary{m}, std::invalid_argument);
}

TEST(Optics, FourierEntries) {
    const ModeUnitary f = fourier_matrix(3);
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) EXPECT_LT(std::abs(f(i, j) - std::pow(w, i * j) / std::sqrt(3.0)), 1e-14);
    }
}

TEST(Optics, PermutationSendsModes) {
    const std::vector<int> perm{2, 0, 1};
    const ModeUnitary p = permutation_unitary(perm);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(p(perm[static_cast<std::size_t>(i)], i), Complex(1.0));
}

TEST(Optics, ComposeOrder) {
    std::mt19937_64 rng(3);
    const ModeUnitary a(hdfusion::testing::random_unitary(3, rng));
    const ModeUnitary b(hdfusion::testing::random_unitary(3, rng));
    EXPECT_TRUE(compose(a, b).approx_equal(ModeUnitary(b.matrix() * a.matrix()), 1e-12));
}

TEST(Optics, EmbedPlacesBlock) {
    const ModeUnitary h = fourier_matrix(2);
    const std::vector<int> modes{3, 1};
    const ModeUnitary e = embed(h, modes, 4);
    EXPECT_EQ(e(0, 0), Complex(1.0));
    EXPECT_LT(std::abs(e(3, 1) - h(0, 1)), 1e-15);
    EXPECT_LT(std::abs(e(1, 1) - h(1, 1)), 1e-15);
}

TEST(Optics, BeamsplitterHalf) {
    const ModeUnitary b = beamsplitter_r(0.5);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(b(i, j)), std::sqrt(0.5), 1e-15);
    }
}

TEST(Optics, RandomUnitariesAndCircuitsAreUnitary) {
    std::mt19937_64 rng(5);
    int cases = 0;
    for (int n = 1; n <= 8; ++n) {
        for (int k = 0; k < 25; ++k, ++cases) {
            EXPECT_LT(ModeUnitary(hdfusion::testing::random_unitary(n, rng)).unitarity_error(), 1e-10);
        }
    }
    for (double r = 0.0; r <= 1.0; r += 0.05, ++cases) EXPECT_LT(beamsplitter_r(r).unitarity_error(), 1e-10);
    for (int n = 1; n <= 12; ++n, ++cases) EXPECT_LT(fourier_matrix(n).unitarity_error(), 1e-10);
    std::vector<FusionProtocol> protocols = {protocol_even(2), protocol_even(4), protocol_even(6), protocol_odd(3, 4),
                                             protocol_odd(5, 6), protocol_wstate(3, true, false),
                                             protocol_wstate(5, true, false), protocol_ghz_boost(3, {0}),
                                             protocol_boost_qutrit(3), protocol_boost_qubit(3, true, true)};
    for (int d = 3; d <= 5; ++d) {
        for (int r = 1; r <= 5; ++r) protocols.push_back(protocol_ztl(d, r));
    }
    for (const auto v : {HVariant::kA, HVariant::kB, HVariant::kC}) {
        for (double r = 0.0; r < 1.0; r += 0.1) protocols.push_back(protocol_appendix_d(1, v, r));
    }
    for (const auto& p : protocols) {
        EXPECT_LT(unitarity_error(p.circuit.matrix()), 1e-10) << p.name;
        ++cases;
    }
    EXPECT_GE(cases, 200);
}
