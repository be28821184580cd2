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

#include "niqp/sampler.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "niqp/errors.h"
#include "niqp/percolation.h"
#include "niqp/reduction.h"
#include "niqp/thresholds.h"

namespace niqp {

struct NoisyIqpSampler::Prepared {
    ReducedCircuit reduced;
    ComponentPartition partition;
};

NoisyIqpSampler::NoisyIqpSampler(Circuit circuit, SamplerOptions options)
    : circuit_(std::move(circuit)), options_(options) {
}

void NoisyIqpSampler::simulate_components(const Prepared &prepared, Rng &rng, ShotResult &result) const {
    const auto &partition = prepared.partition;
    const auto &rc = prepared.reduced;
    if (partition.max_size > options_.max_subsystem_qubits) {
        throw ResourceError("Largest component has " + std::to_string(partition.max_size) +
                            " qubits, above the statevector cap of " + std::to_string(options_.max_subsystem_qubits) +
                            ".");
    }

    std::vector<std::vector<const Channel *>> per_component(partition.components.size());
    for (const auto &ch : rc.channels) {
        Qubit anchor = channel_support(ch)[0];
        per_component[partition.component_of[anchor]].push_back(&ch);
    }

    for (size_t j = 0; j < partition.components.size(); j++) {
        const auto &vertices = partition.components[j];
        if (vertices.size() == 1 && rc.frontier.is_classical(vertices[0])) {
            // A basis state measured in the Hadamard basis is uniform.
            result.outcome[vertices[0]] = fair_bit(rng) ? 1 : 0;
            continue;
        }
        SubState state(vertices, options_.max_subsystem_qubits);
        for (const Channel *ch : per_component[j]) {
            if (const auto *g = std::get_if<DiagonalGate>(ch)) {
                state.apply_diagonal(*g);
            } else {
                const auto &noise = std::get<NoiseChannel>(*ch);
                state.apply_pauli_trajectory(noise.params, noise.qubit, rng);
            }
        }
        std::vector<uint8_t> bits = state.hadamard_measure(rng);
        for (size_t i = 0; i < vertices.size(); i++) {
            result.outcome[vertices[i]] = bits[i];
        }
        result.work_units += uint64_t{1} << vertices.size();
    }
}

ShotResult NoisyIqpSampler::sample_exact(Rng &rng) const {
    ShotResult result;
    result.outcome.assign(circuit_.num_qubits(), 0);
    Prepared prepared{reduce(circuit_, rng), {}};
    prepared.partition = components(prepared.reduced);
    result.max_component = prepared.partition.max_size;
    simulate_components(prepared, rng, result);
    return result;
}

double NoisyIqpSampler::decay_rate() const {
    const size_t k = circuit_.locality();
    const size_t d = circuit_.gate_depth();
    if (k < 2 || d == 0) {
        return std::numeric_limits<double>::infinity();
    }
    double p = circuit_.min_noise_strength().value_or(0.0);
    if (p >= 0.5) {
        return std::numeric_limits<double>::infinity();
    }
    return component_decay_rate(p, static_cast<int>(k), static_cast<double>(d));
}

double NoisyIqpSampler::monte_carlo_cutoff(double epsilon) const {
    if (!(epsilon > 0 && epsilon < 1)) {
        throw std::invalid_argument("epsilon must lie in (0, 1).");
    }
    double c = decay_rate();
    if (std::isinf(c)) {
        return std::numeric_limits<double>::infinity();
    }
    if (!(c > 0)) {
        throw ThresholdError("c_{p,k}(d) = " + std::to_string(c) +
                             " is not positive: the circuit is below the percolation threshold.");
    }
    return std::log(static_cast<double>(circuit_.num_qubits()) / epsilon) / c;
}

ShotResult NoisyIqpSampler::sample_monte_carlo(double epsilon, Rng &rng) const {
    const double cutoff = monte_carlo_cutoff(epsilon);
    ShotResult result;
    result.outcome.assign(circuit_.num_qubits(), 0);
    Prepared prepared{reduce(circuit_, rng), {}};
    prepared.partition = components(prepared.reduced);
    result.max_component = prepared.partition.max_size;
    if (static_cast<double>(prepared.partition.max_size) > cutoff) {
        result.fell_back_uniform = true;
        for (auto &bit : result.outcome) {
            bit = fair_bit(rng) ? 1 : 0;
        }
        return result;
    }
    simulate_components(prepared, rng, result);
    return result;
}

std::vector<ShotResult> NoisyIqpSampler::sample_batch(SamplingMode mode, size_t shots, uint64_t seed,
                                                      double epsilon, size_t threads) const {
    if (mode == SamplingMode::kMonteCarlo) {
        // Surface configuration errors before spawning workers.
        monte_carlo_cutoff(epsilon);
    }
    std::vector<ShotResult> results(shots);
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::mutex failure_mutex;

    auto worker = [&]() {
        while (!failed.load()) {
            size_t j = next.fetch_add(1);
            if (j >= shots) {
                return;
            }
            try {
                Rng rng = derive_stream(seed, j);
                results[j] = mode == SamplingMode::kExact ? sample_exact(rng) : sample_monte_carlo(epsilon, rng);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                failed.store(true);
                return;
            }
        }
    };

    threads = std::max<size_t>(1, std::min(threads, shots));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return results;
}

double expected_runtime_bound(size_t n, size_t d, double p, int k, double constant) {
    int threshold = d_c(p, k);
    if (static_cast<int>(d) < threshold) {
        throw ThresholdError("Depth " + std::to_string(d) + " is below d_c = " + std::to_string(threshold) +
                             "; the expected runtime bound does not apply.");
    }
    return constant * static_cast<double>(d) * std::pow(static_cast<double>(n), 5);
}

}  // namespace niqp
