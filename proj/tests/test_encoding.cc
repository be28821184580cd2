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
#include <set>

#include "niqp/encoding.h"
#include "niqp/oracle.h"
#include "test_support.h"

namespace niqp {
namespace {

constexpr double kPi = std::numbers::pi;

// Independent phase of exp(i m pi/8 Z^{(x)k}) at basis state x, in eighths.
int target_phase(int m, uint64_t x) {
    int v = (std::popcount(x) % 2 == 0 ? m : -m) % 16;
    return v < 0 ? v + 16 : v;
}

std::vector<Qubit> iota_support(size_t k, Qubit offset = 0) {
    std::vector<Qubit> s(k);
    for (size_t i = 0; i < k; i++) {
        s[i] = offset + static_cast<Qubit>(i);
    }
    return s;
}

void expect_exact_reduction(size_t k, int m) {
    auto support = iota_support(k, 5);
    auto red = reduce_locality(support, m);
    std::vector<ZRotation> flat;
    for (const auto &layer : red.layers) {
        std::set<Qubit> used;
        for (const auto &rot : layer) {
            EXPECT_LE(rot.support.size(), 3u);
            for (Qubit q : rot.support) {
                EXPECT_TRUE(used.insert(q).second) << "overlap within a layer";
            }
            flat.push_back(rot);
        }
    }
    for (uint64_t x = 0; x < (uint64_t{1} << k); x++) {
        int got = (rotation_phase_eighths(flat, support, x) + red.global_phase_eighths) % 16;
        EXPECT_EQ(got, target_phase(m, x)) << "k=" << k << " m=" << m << " x=" << x;
    }
}

TEST(ZStringAngle, Detection) {
    auto a = z_string_angle(make_gate({"rzz", {0, 1}, 0.3, {}}));
    ASSERT_TRUE(a.has_value());
    EXPECT_NEAR(*a, 0.3, 1e-12);
    auto shifted = DiagonalGate({0, 1, 2}, [] {
        auto p = z_string_phases(3, -0.7);
        for (auto &v : p) {
            v += 1.1;
        }
        return p;
    }());
    ASSERT_TRUE(z_string_angle(shifted).has_value());
    EXPECT_NEAR(*z_string_angle(shifted), -0.7, 1e-12);
    EXPECT_FALSE(z_string_angle(make_gate({"cz", {0, 1}, {}, {}})).has_value());
}

TEST(EncodeCircuit, TwoCopiesOfRzz) {
    Circuit c(2);
    c.append_layer({make_gate({"rzz", {0, 1}, kPi / 4, {}})});
    Circuit e = encode_circuit(c, 2);
    ASSERT_EQ(e.num_qubits(), 4u);
    ASSERT_EQ(e.layers().size(), 1u);
    const auto &g = std::get<DiagonalGate>(e.layers()[0][0]);
    EXPECT_EQ(g.support(), (std::vector<Qubit>{0, 1, 2, 3}));
    EXPECT_TRUE(g.equivalent_to(DiagonalGate({0, 1, 2, 3}, z_string_phases(4, kPi / 4))));
}

TEST(EncodeCircuit, SingleCopyIsIdentity) {
    Rng rng(1);
    Circuit c = testing::random_z_string_circuit(4, 3, 3, rng);
    EXPECT_EQ(encode_circuit(c, 1), c);
}

TEST(EncodeCircuit, Errors) {
    Circuit noisy = intersperse_noise(testing::brickwork(2, 1), PauliNoiseParams::dephasing(0.1));
    EXPECT_THROW(encode_circuit(noisy, 3), std::invalid_argument);
    EXPECT_THROW(encode_circuit(testing::brickwork(2, 1), 3), std::invalid_argument);
    Circuit ok(1);
    EXPECT_THROW(encode_circuit(ok, 0), std::invalid_argument);
}

TEST(EncodeCircuit, DecodedDistributionEqualsOriginal) {
    Rng rng(2);
    for (int t = 0; t < 5; t++) {
        const size_t n = 1 + rng() % 3;
        Circuit c = testing::random_z_string_circuit(n, 3, n, rng);
        Circuit e = encode_circuit(c, 3);
        auto original = exact_distribution(c);
        auto encoded = exact_distribution(e);
        RepetitionCode code{n, 3};
        std::vector<double> decoded(original.probs.size(), 0.0);
        for (uint64_t x = 0; x < encoded.probs.size(); x++) {
            std::vector<uint8_t> bits(3 * n);
            for (size_t i = 0; i < bits.size(); i++) {
                bits[i] = (x >> (bits.size() - 1 - i)) & 1;
            }
            decoded[outcome_index(decode_majority(bits, code))] += encoded.probs[x];
        }
        EXPECT_LE(tvd(decoded, original.probs), 1e-10);
    }
}

TEST(DecodeMajority, Blocks) {
    RepetitionCode one{1, 3};
    EXPECT_EQ(decode_majority(std::vector<uint8_t>{1, 1, 0}, one), std::vector<uint8_t>{1});
    EXPECT_EQ(decode_majority(std::vector<uint8_t>{0, 0, 0}, one), std::vector<uint8_t>{0});
    // Interleaved layout: physical j * n + i is copy j of logical i.
    RepetitionCode two{2, 3};
    EXPECT_EQ(decode_majority(std::vector<uint8_t>{1, 0, 1, 0, 0, 1}, two), (std::vector<uint8_t>{1, 0}));
    EXPECT_THROW(decode_majority(std::vector<uint8_t>{1, 1}, RepetitionCode{1, 2}), std::invalid_argument);
    EXPECT_THROW(decode_majority(std::vector<uint8_t>{1, 1}, one), std::invalid_argument);
}

TEST(PFailBound, Values) {
    EXPECT_NEAR(p_fail_bound(0.1, 2), 0.36, 1e-15);
    EXPECT_EQ(p_fail_bound(0.0, 5), 0.0);
    EXPECT_EQ(p_fail_bound(0.5, 7), 1.0);
    EXPECT_NEAR(p_fail_bound(0.1, 5), 0.07776, 1e-12);
    EXPECT_THROW(p_fail_bound(0.6, 3), std::domain_error);
}

TEST(DecodeMajority, FlipRateBelowBound) {
    Rng rng(3);
    const int blocks = 100000;
    RepetitionCode code{1, 5};
    int failures = 0;
    for (int b = 0; b < blocks; b++) {
        std::vector<uint8_t> bits(5, 0);
        apply_bitflips(bits, 0.1, rng);
        failures += decode_majority(bits, code)[0];
    }
    double bound = p_fail_bound(0.1, 5);
    double f = static_cast<double>(failures) / blocks;
    EXPECT_LE(f, bound + 4 * std::sqrt(bound * (1 - bound) / blocks));
}

TEST(ReduceLocality, WeightThreeIsItself) {
    auto red = reduce_locality(iota_support(3), 1);
    ASSERT_EQ(red.layers.size(), 1u);
    ASSERT_EQ(red.layers[0].size(), 1u);
    EXPECT_EQ(red.layers[0][0].eighths, 1);
    expect_exact_reduction(3, 1);
}

TEST(ReduceLocality, WeightTwoQuarterIsItself) {
    auto red = reduce_locality(iota_support(2), 2);
    ASSERT_EQ(red.layers.size(), 1u);
    EXPECT_EQ(red.layers[0][0].support.size(), 2u);
    EXPECT_EQ(red.layers[0][0].eighths, 2);
    expect_exact_reduction(2, 2);
}

TEST(ReduceLocality, PhaseTablesAndLayerBounds) {
    for (size_t k : {3, 6, 9}) {
        for (int m : {1, 3, 5, 7, 9, 15, -1}) {
            expect_exact_reduction(k, m);
        }
        EXPECT_LE(reduce_locality(iota_support(k), 1).layers.size(), k * k / 2.0);
    }
    for (size_t k : {2, 4, 6, 8}) {
        for (int m : {2, 6, 10, 14}) {
            expect_exact_reduction(k, m);
        }
        EXPECT_LE(reduce_locality(iota_support(k), 2).layers.size(), k);
    }
    EXPECT_EQ(reduce_locality(iota_support(6), 1).layers.size(), 16u);
    EXPECT_EQ(reduce_locality(iota_support(9), 1).layers.size(), 38u);
}

TEST(ReduceLocality, MultiplesOfHalfPi) {
    for (size_t k : {1, 4, 5, 7}) {
        for (int m : {0, 4, 8, 12}) {
            expect_exact_reduction(k, m);
        }
    }
}

TEST(ReduceLocality, DivisibilityErrors) {
    EXPECT_THROW(reduce_locality(iota_support(4), 1), std::invalid_argument);
    EXPECT_THROW(reduce_locality(iota_support(3), 2), std::invalid_argument);
    EXPECT_THROW(reduce_locality(std::vector<Qubit>{}, 1), std::invalid_argument);
}

TEST(ReduceCircuitLocality, PreservesDistribution) {
    Circuit c(2);
    c.append_layer({make_gate({"rzz", {0, 1}, kPi / 8, {}})});
    c.append_layer({make_gate({"rz", {0}, kPi / 4, {}})});
    Circuit e = encode_circuit(c, 3);
    Circuit r = reduce_circuit_locality(e);
    EXPECT_LE(r.locality(), 3u);
    EXPECT_LE(tvd(exact_distribution(e), exact_distribution(r)), 1e-10);

    Circuit bad(4);
    bad.append_layer({make_gate({"rzk", {0, 1, 2, 3}, 0.3, {}})});
    EXPECT_THROW(reduce_circuit_locality(bad), std::invalid_argument);
}

}  // namespace
}  // namespace niqp
