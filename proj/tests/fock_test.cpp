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
#include "hdfusion/fock.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace hdfusion;
using hdfusion::testing::polynomial_amplitude;
using hdfusion::testing::random_unitary;

TEST(FockPattern, Basics) {
    const FockPattern p{1, 0, 2};
    EXPECT_EQ(p.n_modes(), 3);
    EXPECT_EQ(p.total_photons(), 3);
    EXPECT_DOUBLE_EQ(p.factorial_product(), 2.0);
    EXPECT_EQ(p.to_string(), "|1,0,2>");
    EXPECT_EQ(p.concat(FockPattern{4}), (FockPattern{1, 0, 2, 4}));
    EXPECT_THROW(FockPattern({1, -1}), std::invalid_argument);
}

TEST(QuditIndex, PortMajor) {
    EXPECT_EQ((QuditIndex{2, 1}.flat(3)), 7);
    EXPECT_EQ(QuditIndex::from_flat(7, 3), (QuditIndex{2, 1}));
}

TEST(Compositions, DecreasingLexOrder) {
    std::vector<FockPattern> got(Compositions(2, 2).begin(), Compositions(2, 2).end());
    ASSERT_EQ(got.size(), 3u);
    EXPECT_EQ(got[0], (FockPattern{2, 0}));
    EXPECT_EQ(got[1], (FockPattern{1, 1}));
    EXPECT_EQ(got[2], (FockPattern{0, 2}));
}

TEST(Compositions, CountsAndUniqueness) {
    for (int m = 1; m <= 6; ++m) {
        for (int n = 0; n <= 5; ++n) {
            std::vector<FockPattern> all(Compositions(m, n).begin(), Compositions(m, n).end());
            EXPECT_EQ(all.size(), composition_count(m, n));
            for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
            for (const auto& p : all) EXPECT_EQ(p.total_photons(), n);
        }
    }
}

TEST(Compositions, FilterAndGroups) {
    const auto even_first = enumerate_patterns(3, 2, [](const FockPattern& p) { return p[0] % 2 == 0; });
    EXPECT_EQ(even_first.size(), 4u);
    const auto grouped = enumerate_grouped(4, {{0, 1}, {2, 3}}, {{1, 1}, {2, 0}});
    EXPECT_EQ(grouped.size(), 4u + 3u);
    for (std::size_t i = 1; i < grouped.size(); ++i) EXPECT_GT(grouped[i - 1], grouped[i]);
}

TEST(Amplitude, HongOuMandel) {
    const ModeUnitary h = fourier_matrix(2);
    EXPECT_LT(std::abs(transition_amplitude(h, {1, 1}, {1, 1})), 1e-15);
    EXPECT_NEAR(std::norm(transition_amplitude(h, {1, 1}, {2, 0})), 0.5, 1e-14);
}

TEST(Amplitude, FourierBunching) {
    const ModeUnitary f = fourier_matrix(3);
    EXPECT_NEAR(std::norm(transition_amplitude(f, {1, 1, 1}, {3, 0, 0})), 2.0 / 9.0, 1e-14);
    EXPECT_LT(std::abs(transition_amplitude(f, {1, 1, 1}, {1, 1, 1}) -
                       hdfusion::testing::naive_permanent(f.matrix())),
              1e-14);
}

TEST(Amplitude, PhotonNumberMismatchIsZero) {
    EXPECT_EQ(transition_amplitude(fourier_matrix(2), {1, 0}, {1, 1}), Complex(0.0));
    EXPECT_THROW(transition_amplitude(fourier_matrix(2), {1, 0, 0}, {1, 0, 0}), std::invalid_argument);
}

TEST(Amplitude, MatchesPolynomialExpansion) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> modes(1, 4), photons(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = modes(rng), n = photons(rng);
        const ModeUnitary u(random_unitary(m, rng));
        const std::vector<FockPattern> all = enumerate_patterns(m, n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        const FockPattern in = all[pick(rng)], out = all[pick(rng)];
        EXPECT_LT(std::abs(transition_amplitude(u, in, out) - polynomial_amplitude(u.matrix(), in, out)), 1e-12);
    }
}

TEST(FockVector, ApplyMatchesBruteForceAndPreservesNorm) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        const ModeUnitary u(random_unitary(4, rng));
        FockVector v(4);
        v.add({2, 1, 0, 0}, Complex(0.6, 0.0));
        v.add({0, 1, 1, 1}, Complex(0.0, 0.8));
        const FockVector out = apply_unitary(v, u);
        EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
        EXPECT_LT(out.distance(hdfusion::testing::brute_force_apply(v, u.matrix())), 1e-12);
    }
}

TEST(FockVector, TensorAndEmbed) {
    const FockVector a(2, {{FockPattern{1, 0}, Complex(1.0)}});
    const FockVector b(1, {{FockPattern{2}, Complex(1.0)}});
    EXPECT_EQ(a.tensor(b).amplitude({1, 0, 2}), Complex(1.0));
    const std::vector<int> target{3, 0};
    EXPECT_EQ(a.embedded(target, 4).amplitude({0, 0, 0, 1}), Complex(1.0));
    EXPECT_EQ(a.photon_number(), 1);
}
