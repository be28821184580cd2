// Copyright 2026 The niqp Authors
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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "niqp/errors.h"
#include "niqp/statevector.h"

namespace niqp {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST(SubState, StartsInPlus) {
    SubState s({4, 7});
    for (auto a : s.amplitudes()) {
        EXPECT_NEAR(std::abs(a - cd(0.5, 0)), 0, 1e-15);
    }
    EXPECT_THROW(SubState(std::vector<Qubit>(5), 4), ResourceError);
    EXPECT_THROW(SubState({0}, std::vector<cd>(3)), std::invalid_argument);
}

TEST(SubState, ZOnPlus) {
    SubState s({0});
    s.apply_diagonal(make_gate({"z", {0}, {}, {}}));
    EXPECT_NEAR(s.amplitudes()[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s.amplitudes()[1].real(), -1 / std::sqrt(2.0), 1e-15);
}

TEST(SubState, IdentityGateAndSupportCheck) {
    SubState s({0, 1});
    auto before = std::vector<cd>(s.amplitudes().begin(), s.amplitudes().end());
    s.apply_diagonal(DiagonalGate({1}, {0, 0}));
    for (size_t i = 0; i < before.size(); i++) {
        EXPECT_EQ(s.amplitudes()[i], before[i]);
    }
    EXPECT_THROW(s.apply_diagonal(DiagonalGate({2}, {0, 0})), std::invalid_argument);
}

TEST(SubState, GateUsesSupportOrder) {
    // Phase on |q3 = 1, q5 = 0> only; state over (5, 3).
    SubState s({5, 3}, std::vector<cd>{0.5, 0.5, 0.5, 0.5});
    s.apply_diagonal(DiagonalGate({3, 5}, {0, 0, kPi, 0}));
    // index bits (q5, q3): q3 = 1, q5 = 0 is index 0b01.
    EXPECT_NEAR(s.amplitudes()[1].real(), -0.5, 1e-15);
    EXPECT_NEAR(s.amplitudes()[2].real(), 0.5, 1e-15);
}

TEST(SubState, PaulisOnBasisStates) {
    SubState s({0}, std::vector<cd>{1, 0});
    s.apply_pauli(Pauli::kX, 0);
    EXPECT_EQ(s.amplitudes()[1], cd(1, 0));
    s.apply_pauli(Pauli::kY, 0);
    EXPECT_NEAR(std::abs(s.amplitudes()[0] - cd(0, -1)), 0, 1e-15);
    Rng rng(1);
    SubState t({0}, std::vector<cd>{1, 0});
    EXPECT_EQ(t.apply_pauli_trajectory({1.0, 0, 0}, 0, rng), Pauli::kX);
    EXPECT_EQ(t.amplitudes()[1], cd(1, 0));
    SubState u({0}, std::vector<cd>{1, 0});
    u.apply_pauli_trajectory({}, 0, rng);
    EXPECT_EQ(u.amplitudes()[0], cd(1, 0));
}

TEST(SubState, WalshHadamardIsInvolution) {
    Rng rng(2);
    std::normal_distribution<double> g;
    std::vector<cd> amps(16);
    double norm = 0;
    for (auto &a : amps) {
        a = cd(g(rng), g(rng));
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    SubState s({0, 1, 2, 3}, amps);
    s.walsh_hadamard();
    s.walsh_hadamard();
    for (size_t i = 0; i < amps.size(); i++) {
        EXPECT_NEAR(std::abs(s.amplitudes()[i] - amps[i]), 0, 1e-12);
    }
}

TEST(SubState, NormPreservedOverManyOperations) {
    Rng rng(3);
    SubState s({0, 1, 2});
    for (int i = 0; i < 1000; i++) {
        std::vector<double> ph(4);
        for (auto &p : ph) {
            p = 2 * kPi * uniform01(rng);
        }
        s.apply_diagonal(DiagonalGate({static_cast<Qubit>(i % 3), static_cast<Qubit>((i + 1) % 3)}, ph));
        s.apply_pauli(static_cast<Pauli>(i % 4), static_cast<Qubit>(i % 3));
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
}

TEST(HadamardMeasure, PlusGivesZero) {
    Rng rng(4);
    for (int i = 0; i < 100; i++) {
        SubState s({0, 1});
        EXPECT_EQ(s.hadamard_measure(rng), (std::vector<uint8_t>{0, 0}));
    }
}

TEST(HadamardMeasure, TGateProbability) {
    Rng rng(5);
    const int shots = 100000;
    int zeros = 0;
    for (int i = 0; i < shots; i++) {
        SubState s({0});
        s.apply_diagonal(make_gate({"t", {0}, {}, {}}));
        zeros += s.hadamard_measure(rng)[0] == 0;
    }
    double p0 = std::pow(std::cos(kPi / 8), 2);
    EXPECT_NEAR(static_cast<double>(zeros) / shots, p0, 4 * std::sqrt(p0 * (1 - p0) / shots));
}

TEST(HadamardMeasure, DephasingTrajectoriesAverageToHalf) {
    Rng rng(6);
    const int shots = 100000;
    int zeros = 0;
    for (int i = 0; i < shots; i++) {
        SubState s({0});
        s.apply_pauli_trajectory(PauliNoiseParams::dephasing(0.5), 0, rng);
        zeros += s.hadamard_measure(rng)[0] == 0;
    }
    EXPECT_NEAR(static_cast<double>(zeros) / shots, 0.5, 0.01);
}

TEST(HadamardMeasure, ControlledZDistribution) {
    // H (x) H CZ |++>: probabilities 1/4 each.
    Rng rng(7);
    std::vector<int> counts(4);
    const int shots = 100000;
    for (int i = 0; i < shots; i++) {
        SubState s({0, 1});
        s.apply_diagonal(make_gate({"cz", {0, 1}, {}, {}}));
        auto b = s.hadamard_measure(rng);
        counts[b[0] * 2 + b[1]]++;
    }
    for (int c : counts) {
        EXPECT_NEAR(static_cast<double>(c) / shots, 0.25, 4 * std::sqrt(0.25 * 0.75 / shots));
    }
}

TEST(HadamardMeasure, RandomThreeQubitStates) {
    Rng rng(8);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 3; trial++) {
        std::vector<cd> amps(8);
        double norm = 0;
        for (auto &a : amps) {
            a = cd(g(rng), g(rng));
            norm += std::norm(a);
        }
        for (auto &a : amps) {
            a /= std::sqrt(norm);
        }
        SubState ref({0, 1, 2}, amps);
        ref.walsh_hadamard();
        std::vector<int> counts(8);
        const int shots = 100000;
        for (int i = 0; i < shots; i++) {
            SubState s({0, 1, 2}, amps);
            auto b = s.hadamard_measure(rng);
            counts[b[0] * 4 + b[1] * 2 + b[2]]++;
        }
        for (size_t x = 0; x < 8; x++) {
            double p = std::norm(ref.amplitudes()[x]);
            EXPECT_NEAR(static_cast<double>(counts[x]) / shots, p, 4 * std::sqrt(p * (1 - p) / shots) + 1e-9);
        }
    }
}

TEST(HadamardMeasure, RejectsUnnormalizedState) {
    Rng rng(9);
    SubState s({0}, std::vector<cd>{1, 1});
    EXPECT_THROW(s.hadamard_measure(rng), std::runtime_error);
}

}  // namespace
}  // namespace niqp
