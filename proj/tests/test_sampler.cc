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

#include "niqp/errors.h"
#include "niqp/oracle.h"
#include "niqp/sampler.h"
#include "niqp/thresholds.h"
#include "test_support.h"

namespace niqp {
namespace {

ExactDistribution histogram(const std::vector<ShotResult> &shots, size_t n) {
    std::vector<std::vector<uint8_t>> outcomes;
    outcomes.reserve(shots.size());
    for (const auto &s : shots) {
        outcomes.push_back(s.outcome);
    }
    return empirical_distribution(n, outcomes);
}

TEST(Sampler, FullDephasingIsUniform) {
    Circuit c = intersperse_noise(testing::brickwork(6, 3), PauliNoiseParams::dephasing(0.5));
    NoisyIqpSampler s(c);
    auto shots = s.sample_batch(SamplingMode::kExact, 10000, 1);
    for (size_t q = 0; q < 6; q++) {
        double ones = 0;
        for (const auto &r : shots) {
            ones += r.outcome[q];
            EXPECT_EQ(r.work_units, 0u);
            EXPECT_EQ(r.max_component, 1u);
        }
        EXPECT_NEAR(ones / shots.size(), 0.5, 0.02);
    }
}

TEST(Sampler, EmptyNoiselessQubitGivesZero) {
    NoisyIqpSampler s(Circuit(1));
    for (const auto &r : s.sample_batch(SamplingMode::kExact, 100, 2)) {
        EXPECT_EQ(r.outcome, std::vector<uint8_t>{0});
        EXPECT_FALSE(r.fell_back_uniform);
    }
}

TEST(Sampler, MatchesOracleOnDepolarizedChain) {
    Circuit c(3);
    c.append_layer({make_gate({"cz", {0, 1}, {}, {}})});
    c.append_layer({make_gate({"cz", {1, 2}, {}, {}})});
    c = intersperse_noise(c, PauliNoiseParams::depolarizing(0.1));
    NoisyIqpSampler s(c);
    auto shots = s.sample_batch(SamplingMode::kExact, 100000, 3);
    EXPECT_LE(tvd(histogram(shots, 3), exact_distribution(c)), 0.02);
}

TEST(Sampler, MatchesOracleOnRandomCircuits) {
    Rng rng(4);
    for (int trial = 0; trial < 6; trial++) {
        const size_t n = 2 + rng() % 3;
        Circuit base = testing::random_diagonal_circuit(n, 1 + rng() % 4, 3, rng);
        Circuit c = intersperse_noise(base, testing::random_noise(rng));
        const size_t shots = 50000;
        auto results = NoisyIqpSampler(c).sample_batch(SamplingMode::kExact, shots, 100 + trial);
        double tol = 3 * std::sqrt(std::pow(2.0, n) / shots);
        EXPECT_LE(tvd(histogram(results, n), exact_distribution(c)), tol) << trial;
    }
}

TEST(Sampler, DeterministicAcrossThreadCounts) {
    Circuit c = intersperse_noise(testing::brickwork(20, 6), PauliNoiseParams{0.05, 0.02, 0.03});
    NoisyIqpSampler s(c);
    auto a = s.sample_batch(SamplingMode::kExact, 300, 42, 0.0, 1);
    auto b = s.sample_batch(SamplingMode::kExact, 300, 42, 0.0, 4);
    for (size_t i = 0; i < a.size(); i++) {
        EXPECT_EQ(a[i].outcome, b[i].outcome);
        EXPECT_EQ(a[i].work_units, b[i].work_units);
    }
    Rng replay = derive_stream(42, 17);
    EXPECT_EQ(s.sample_exact(replay).outcome, a[17].outcome);
}

TEST(Sampler, ResourceCap) {
    NoisyIqpSampler s(testing::brickwork(12, 2), SamplerOptions{10});
    Rng rng(5);
    EXPECT_THROW(s.sample_exact(rng), ResourceError);
    EXPECT_THROW(s.sample_batch(SamplingMode::kExact, 10, 1, 0.0, 2), ResourceError);
}

TEST(Sampler, MonteCarloCutoff) {
    Circuit c = intersperse_noise(testing::brickwork(100, 20), PauliNoiseParams::dephasing(0.1));
    NoisyIqpSampler s(c);
    double rate = s.decay_rate();
    EXPECT_DOUBLE_EQ(rate, component_decay_rate(0.1, 2, 20));
    EXPECT_DOUBLE_EQ(s.monte_carlo_cutoff(0.5), std::log(100 / 0.5) / rate);
    EXPECT_DOUBLE_EQ(std::log(4 / 0.5) / std::log(2.0), 3.0);
    EXPECT_THROW(s.monte_carlo_cutoff(0.0), std::invalid_argument);
    EXPECT_THROW(s.monte_carlo_cutoff(1.0), std::invalid_argument);
    EXPECT_GT(s.monte_carlo_cutoff(0.99), 0.0);
    EXPECT_LT(s.monte_carlo_cutoff(0.99), s.monte_carlo_cutoff(0.01));
}

TEST(Sampler, MonteCarloBelowThresholdIsAnError) {
    Circuit c = intersperse_noise(testing::brickwork(10, 2), PauliNoiseParams::dephasing(0.01));
    NoisyIqpSampler s(c);
    Rng rng(6);
    EXPECT_LE(s.decay_rate(), 0.0);
    EXPECT_THROW(s.sample_monte_carlo(0.1, rng), ThresholdError);
    EXPECT_THROW(s.sample_batch(SamplingMode::kMonteCarlo, 5, 1, 0.1), ThresholdError);
}

TEST(Sampler, MonteCarloFallsBackWhenComponentIsLarge) {
    // Deep circuit: c is large and the cutoff ln(n / eps) / c drops below 1.
    Circuit c = intersperse_noise(testing::brickwork(200, 40), PauliNoiseParams::dephasing(0.1));
    NoisyIqpSampler s(c);
    ASSERT_GT(s.decay_rate(), 0.0);
    auto shots = s.sample_batch(SamplingMode::kMonteCarlo, 200, 7, 0.9);
    size_t fallbacks = 0;
    for (const auto &r : shots) {
        if (r.fell_back_uniform) {
            fallbacks++;
            EXPECT_GT(static_cast<double>(r.max_component), s.monte_carlo_cutoff(0.9));
            EXPECT_EQ(r.work_units, 0u);
        }
    }
    EXPECT_GT(fallbacks, 0u);
    for (const auto &r : s.sample_batch(SamplingMode::kExact, 50, 7)) {
        EXPECT_FALSE(r.fell_back_uniform);
    }
}

TEST(Sampler, WorkUnitsFarBelowBound) {
    const size_t n = 100;
    const size_t d = static_cast<size_t>(d_c(0.1, 2));
    Circuit c = intersperse_noise(testing::brickwork(n, d), PauliNoiseParams::dephasing(0.1));
    auto shots = NoisyIqpSampler(c).sample_batch(SamplingMode::kExact, 1000, 8);
    double mean = 0;
    for (const auto &r : shots) {
        mean += static_cast<double>(r.work_units);
    }
    mean /= shots.size();
    EXPECT_LE(mean, n * 16.0);
    EXPECT_LT(mean, expected_runtime_bound(n, d, 0.1, 2));
}

TEST(ExpectedRuntimeBound, Values) {
    const int dc = d_c(0.1, 2);
    EXPECT_DOUBLE_EQ(expected_runtime_bound(1, dc, 0.1, 2), dc);
    EXPECT_DOUBLE_EQ(expected_runtime_bound(10, dc, 0.1, 2, 2.0), 2.0 * dc * 1e5);
    EXPECT_THROW(expected_runtime_bound(10, dc - 1, 0.1, 2), ThresholdError);
}

}  // namespace
}  // namespace niqp
