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

#include "niqp/reduction.h"

#include <stdexcept>

#include "niqp/noise.h"

namespace niqp {

DiagonalGate restrict_gate(const DiagonalGate &gate, std::span<const FixedBit> fixed) {
    const auto &support = gate.support();
    const size_t k = support.size();

    // Bit position (from the least significant end) of each support qubit.
    uint64_t fixed_mask = 0;
    uint64_t fixed_value = 0;
    for (const auto &f : fixed) {
        size_t pos = k;
        for (size_t i = 0; i < k; i++) {
            if (support[i] == f.qubit) {
                pos = i;
                break;
            }
        }
        if (pos == k) {
            throw std::invalid_argument("Fixed qubit " + std::to_string(f.qubit) + " is not in the gate support.");
        }
        uint64_t bit = uint64_t{1} << (k - 1 - pos);
        fixed_mask |= bit;
        if (f.value) {
            fixed_value |= bit;
        }
    }
    std::vector<Qubit> free_support;
    std::vector<uint64_t> free_bits;
    for (size_t i = 0; i < k; i++) {
        uint64_t bit = uint64_t{1} << (k - 1 - i);
        if (!(fixed_mask & bit)) {
            free_support.push_back(support[i]);
            free_bits.push_back(bit);
        }
    }
    if (free_support.empty()) {
        throw std::invalid_argument("Restriction fixes every qubit of the gate.");
    }

    const size_t m = free_support.size();
    std::vector<double> phases(size_t{1} << m);
    for (size_t j = 0; j < phases.size(); j++) {
        uint64_t full = fixed_value;
        for (size_t i = 0; i < m; i++) {
            if (j & (size_t{1} << (m - 1 - i))) {
                full |= free_bits[i];
            }
        }
        phases[j] = gate.phases()[full];
    }
    return DiagonalGate(std::move(free_support), std::move(phases), k);
}

bool classical_noise_flip(const PauliNoiseParams &params, bool bit, Rng &rng) {
    double u = uniform01(rng);
    return (u < params.px + params.py) ? !bit : bit;
}

ReducedCircuit reduce(const Circuit &c, Rng &rng) {
    const size_t n = c.num_qubits();

    // Pass 1: choose a branch for every noise channel. Every dephasing error
    // commutes to the start of the circuit, so a qubit hit at least once is
    // classical from the outset.
    std::vector<PauliNoiseParams> residual;
    std::vector<bool> dephased(n, false);
    for (const auto &layer : c.layers()) {
        for (const auto &ch : layer) {
            if (const auto *noise = std::get_if<NoiseChannel>(&ch)) {
                BranchOutcome outcome = sample_branch(noise->params, rng);
                if (const auto *d = std::get_if<Dephase>(&outcome)) {
                    dephased[noise->qubit] = true;
                    residual.push_back(d->channel);
                } else {
                    residual.push_back(std::get<Survive>(outcome).channel);
                }
            }
        }
    }

    ClassicalFrontier frontier(n);
    for (size_t q = 0; q < n; q++) {
        if (dephased[q]) {
            frontier.set_bit(static_cast<Qubit>(q), fair_bit(rng));
        }
    }

    // Pass 2: temporal sweep.
    ReducedCircuit out{n, {}, frontier};
    size_t next_noise = 0;
    std::vector<FixedBit> fixed;
    for (const auto &layer : c.layers()) {
        for (const auto &ch : layer) {
            if (const auto *gate = std::get_if<DiagonalGate>(&ch)) {
                fixed.clear();
                for (Qubit q : gate->support()) {
                    if (out.frontier.is_classical(q)) {
                        fixed.push_back({q, out.frontier.bit(q)});
                    }
                }
                if (fixed.empty()) {
                    out.channels.emplace_back(*gate);
                } else if (fixed.size() < gate->locality()) {
                    out.channels.emplace_back(restrict_gate(*gate, fixed));
                }
                // Fully classical support: a phase on a basis state, dropped.
                continue;
            }
            const auto &noise = std::get<NoiseChannel>(ch);
            const PauliNoiseParams &params = residual[next_noise++];
            if (out.frontier.is_classical(noise.qubit)) {
                out.frontier.set_bit(noise.qubit, classical_noise_flip(params, out.frontier.bit(noise.qubit), rng));
            } else if (!params.is_identity()) {
                out.channels.emplace_back(NoiseChannel{noise.qubit, params});
            }
        }
    }
    return out;
}

}  // namespace niqp
