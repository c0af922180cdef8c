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
#include "hdfusion/states.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace hdfusion;

TEST(QuditState, AddValidates) {
    QuditState s(3, 2);
    EXPECT_THROW(s.add({0}, 1.0), std::invalid_argument);
    EXPECT_THROW(s.add({0, 3}, 1.0), std::invalid_argument);
    s.add({1, 2}, 0.5);
    s.add({1, 2}, 0.5);
    EXPECT_EQ(s.amplitude({1, 2}), Complex(1.0));
    EXPECT_TRUE(s.is_normalized());
}

TEST(QuditState, FockRoundTrip) {
    const QuditState b = bell_state(3);
    const FockVector f = b.to_fock();
    EXPECT_EQ(f.n_modes(), 6);
    EXPECT_NEAR(std::abs(f.amplitude({0, 1, 0, 0, 1, 0})), 1.0 / std::sqrt(3.0), 1e-15);
    const QuditState back = QuditState::from_fock(f, 3);
    for (const auto& [k, a] : b.terms()) EXPECT_EQ(back.amplitude(k), a);
}

TEST(QuditState, FromFockRejectsBunching) {
    FockVector f(4);
    f.add({2, 0, 0, 0}, 1.0);
    EXPECT_THROW(QuditState::from_fock(f, 2), std::invalid_argument);
}

TEST(QuditState, AmplitudeMatrixRoundTrip) {
    ComplexMatrix m(2, 2);
    m << 0.5, Complex(0, 0.5), -0.5, 0.5;
    const QuditState s = QuditState::from_amplitude_matrix(m);
    EXPECT_EQ(s.amplitude({1, 0}), Complex(-0.5));
    EXPECT_TRUE(s.amplitude_matrix().isApprox(m));
}

TEST(Pauli, ShiftAndClock) {
    const ComplexMatrix x = pauli_matrix({1, 0, 3});
    for (int k = 0; k < 3; ++k) EXPECT_EQ(x((k + 1) % 3, k), Complex(1.0));
    const ComplexMatrix z = pauli_matrix({0, 1, 3});
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    EXPECT_LT(std::abs(z(2, 2) - w * w), 1e-14);
    const ComplexMatrix xz = pauli_matrix({1, 1, 3});
    EXPECT_TRUE(xz.isApprox(x * z));
}

TEST(States, Constructors) {
    EXPECT_TRUE(bell_state(4).is_normalized());
    EXPECT_EQ(bell_state(4).size(), 4u);
    EXPECT_TRUE(w_state(5).is_normalized());
    const QuditState a4 = ancilla_A(4);
    EXPECT_EQ(a4.size(), 2u);
    EXPECT_NEAR(std::abs(a4.amplitude({0, 1})), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(std::abs(a4.amplitude({2, 3})), std::sqrt(0.5), 1e-15);
    EXPECT_THROW(ancilla_A(5), std::invalid_argument);
    EXPECT_TRUE(boost_ancilla(3).is_normalized());
    EXPECT_EQ(boost_ancilla(3).amplitude({0, 3, 0}), Complex(1.0 / std::sqrt(3.0)));
    EXPECT_EQ(bunched_state(5, 0, 11).amplitude({5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}), Complex(1.0));
}

// Removing the bins that never carry a photon leaves a (d-2)-party GHZ
// state of dimension d/2 after relabeling each qudit.
TEST(States, AncillaIsGhzAfterRelabeling) {
    for (int d : {4, 6}) {
        const QuditState a = ancilla_A(d);
        QuditState ghz(d / 2, d - 2);
        for (const auto& [ket, amp] : a.terms()) {
            QuditState::Ket reduced;
            for (int q = 0; q < d - 2; ++q) {
                const int k = ket[static_cast<std::size_t>(q)];
                ASSERT_EQ(k % 2, q % 2);
                reduced.push_back((k / 2 - q / 2 + d / 2) % (d / 2));
            }
            ghz.add(reduced, amp);
        }
        ASSERT_EQ(ghz.size(), static_cast<std::size_t>(d / 2));
        for (int r = 0; r < d / 2; ++r) {
            EXPECT_NEAR(std::abs(ghz.amplitude(QuditState::Ket(static_cast<std::size_t>(d - 2), r))),
                        1.0 / std::sqrt(d / 2.0), 1e-14);
        }
    }
}

TEST(States, NamedLookup) {
    EXPECT_EQ(named_state("A4").n_modes(), 8);
    EXPECT_EQ(named_state("W3").n_modes(), 3);
    EXPECT_EQ(named_state("B3").n_modes(), 6);
    EXPECT_EQ(named_state("boost3").n_modes(), 3);
    EXPECT_EQ(named_state("bunched:5@0/11").photon_number(), 5);
    EXPECT_THROW(named_state("nonsense"), std::invalid_argument);
}
