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

#include <numbers>

#include "niqp/circuit.h"
#include "test_support.h"

namespace niqp {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(PauliNoiseParams, StrengthUsesSmallerFlip) {
    EXPECT_DOUBLE_EQ((PauliNoiseParams{0.05, 0.02, 0.03}).strength(), 0.05);
    EXPECT_DOUBLE_EQ(PauliNoiseParams::depolarizing(0.1).strength(), 0.2);
    EXPECT_DOUBLE_EQ(PauliNoiseParams::dephasing(0.3).strength(), 0.3);
    EXPECT_DOUBLE_EQ((PauliNoiseParams{0.2, 0, 0}).strength(), 0.0);
}

TEST(PauliNoiseParams, ValidateRejectsOutOfRange) {
    EXPECT_THROW((PauliNoiseParams{-0.1, 0, 0}).validate(), std::invalid_argument);
    EXPECT_THROW((PauliNoiseParams{0.2, 0.2, 0.2}).validate(), std::invalid_argument);
    EXPECT_NO_THROW((PauliNoiseParams{0.2, 0.2, 0.1}).validate());
    EXPECT_NO_THROW(PauliNoiseParams::dephasing(0.5).validate());
}

TEST(DiagonalGate, ValidatesShape) {
    EXPECT_THROW(DiagonalGate({0, 1}, {0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(DiagonalGate({0, 0}, {0, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(DiagonalGate({}, {0}), std::invalid_argument);
    EXPECT_THROW(DiagonalGate({0, 1, 2}, std::vector<double>(8), 2), std::invalid_argument);
    EXPECT_NO_THROW(DiagonalGate({3, 5}, {0, 0, 0, 1}));
}

TEST(DiagonalGate, EquivalenceIgnoresGlobalPhaseAndTwoPi) {
    DiagonalGate a({0, 1}, {0, 0, 0, kPi});
    DiagonalGate b({0, 1}, {1, 1, 1, 1 + kPi + 2 * kPi});
    DiagonalGate c({0, 1}, {0, 0, 0, kPi / 2});
    EXPECT_TRUE(a.equivalent_to(b));
    EXPECT_FALSE(a.equivalent_to(c));
    EXPECT_FALSE(a.equivalent_to(DiagonalGate({1, 0}, {0, 0, 0, kPi})));
}

TEST(Circuit, ValidatesLayers) {
    Circuit c(3);
    EXPECT_THROW(c.append_layer({DiagonalGate({0, 3}, {0, 0, 0, 0})}), std::invalid_argument);
    EXPECT_THROW(c.append_layer({DiagonalGate({0, 1}, {0, 0, 0, 0}), DiagonalGate({1}, {0, 0})}),
                 std::invalid_argument);
    EXPECT_THROW(c.append_layer({DiagonalGate({0}, {0, 0}), NoiseChannel{0, {0, 0, 0.1}}}), std::invalid_argument);
    EXPECT_THROW(c.append_layer({NoiseChannel{0, {0.3, 0.3, 0}}}), std::invalid_argument);
    EXPECT_NO_THROW(c.append_layer({DiagonalGate({0, 1}, {0, 0, 0, 0}), NoiseChannel{2, {0, 0, 0.1}}}));
    EXPECT_EQ(c.gate_depth(), 1u);
    EXPECT_EQ(c.locality(), 2u);
    EXPECT_TRUE(c.has_noise());
    EXPECT_EQ(c.num_channels(), 2u);
}

TEST(Circuit, DepthCountsGateLayersOnly) {
    Circuit c = intersperse_noise(testing::brickwork(4, 3), PauliNoiseParams::dephasing(0.1));
    EXPECT_EQ(c.layers().size(), 6u);
    EXPECT_EQ(c.gate_depth(), 3u);
    ASSERT_TRUE(c.min_noise_strength().has_value());
    EXPECT_DOUBLE_EQ(*c.min_noise_strength(), 0.1);
    EXPECT_THROW(intersperse_noise(c, PauliNoiseParams::dephasing(0.1)), std::invalid_argument);
}

TEST(MakeGate, NamedGatesHaveExpectedPhases) {
    EXPECT_EQ(make_gate({"cz", {0, 1}, {}, {}}).phases(), (std::vector<double>{0, 0, 0, kPi}));
    EXPECT_EQ(make_gate({"t", {2}, {}, {}}).phases(), (std::vector<double>{0, kPi / 4}));
    EXPECT_EQ(make_gate({"ccz", {0, 1, 2}, {}, {}}).phases().back(), kPi);
    EXPECT_EQ(make_gate({"cp", {0, 1}, 0.5, {}}).phases(), (std::vector<double>{0, 0, 0, 0.5}));
    EXPECT_EQ(make_gate({"rzz", {0, 1}, 0.25, {}}).phases(), (std::vector<double>{0.25, -0.25, -0.25, 0.25}));
    EXPECT_EQ(make_gate({"rzk", {0, 1, 2}, 0.1, {}}).phases().size(), 8u);
}

TEST(MakeGate, RejectsBadSpecs) {
    EXPECT_THROW(make_gate({"h", {0}, {}, {}}), std::invalid_argument);
    EXPECT_THROW(make_gate({"cz", {0}, {}, {}}), std::invalid_argument);
    EXPECT_THROW(make_gate({"rz", {0}, {}, {}}), std::invalid_argument);
    EXPECT_THROW(make_gate({"z", {0}, 0.3, {}}), std::invalid_argument);
    EXPECT_THROW(make_gate({"cz", {0, 1}, {}, {0, 0, 0, 0}}), std::invalid_argument);
}

TEST(InteractionGraph, CliquesAndDegrees) {
    Circuit c(5);
    c.append_layer({make_gate({"ccz", {0, 1, 2}, {}, {}}), make_gate({"cz", {3, 4}, {}, {}})});
    c.append_layer({make_gate({"cz", {0, 1}, {}, {}}), make_gate({"z", {4}, {}, {}})});
    auto g = interaction_graph(c);
    EXPECT_EQ(g.num_edges(), 4u);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_FALSE(g.has_edge(2, 3));
    EXPECT_EQ(g.max_degree(), 2u);
}

TEST(InteractionGraph, BrickworkIsAPath) {
    auto g = interaction_graph(testing::brickwork(6, 4));
    EXPECT_EQ(g.num_edges(), 5u);
    EXPECT_EQ(g.max_degree(), 2u);
}

}  // namespace
}  // namespace niqp
