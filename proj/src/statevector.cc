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

#include "niqp/statevector.h"

#include <cmath>
#include <stdexcept>

#include "niqp/errors.h"

namespace niqp {

SubState::SubState(std::vector<Qubit> qubits, size_t max_qubits) : qubits_(std::move(qubits)) {
    if (qubits_.size() > max_qubits) {
        throw ResourceError("Component of " + std::to_string(qubits_.size()) +
                            " qubits exceeds the statevector cap of " + std::to_string(max_qubits) + ".");
    }
    const size_t dim = size_t{1} << qubits_.size();
    amplitudes_.assign(dim, std::complex<double>(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
}

SubState::SubState(std::vector<Qubit> qubits, std::vector<std::complex<double>> amplitudes)
    : qubits_(std::move(qubits)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != (size_t{1} << qubits_.size())) {
        throw std::invalid_argument("Amplitude count must be 2^(number of qubits).");
    }
}

double SubState::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

size_t SubState::local_position(Qubit q) const {
    for (size_t i = 0; i < qubits_.size(); i++) {
        if (qubits_[i] == q) {
            return i;
        }
    }
    throw std::invalid_argument("Qubit " + std::to_string(q) + " is not part of this subsystem.");
}

void SubState::apply_diagonal(const DiagonalGate &gate) {
    const size_t l = qubits_.size();
    const auto &support = gate.support();
    const size_t k = support.size();
    std::vector<size_t> shifts(k);
    for (size_t i = 0; i < k; i++) {
        shifts[i] = l - 1 - local_position(support[i]);
    }
    std::vector<std::complex<double>> factors(gate.phases().size());
    for (size_t j = 0; j < factors.size(); j++) {
        factors[j] = std::polar(1.0, gate.phases()[j]);
    }
    for (size_t idx = 0; idx < amplitudes_.size(); idx++) {
        size_t j = 0;
        for (size_t i = 0; i < k; i++) {
            j = (j << 1) | ((idx >> shifts[i]) & 1);
        }
        amplitudes_[idx] *= factors[j];
    }
}

void SubState::apply_pauli(Pauli pauli, Qubit qubit) {
    if (pauli == Pauli::kI) {
        return;
    }
    const size_t bit = size_t{1} << (qubits_.size() - 1 - local_position(qubit));
    const std::complex<double> i_unit(0.0, 1.0);
    for (size_t idx = 0; idx < amplitudes_.size(); idx++) {
        if (pauli == Pauli::kZ) {
            if (idx & bit) {
                amplitudes_[idx] = -amplitudes_[idx];
            }
            continue;
        }
        if (idx & bit) {
            continue;
        }
        auto &a0 = amplitudes_[idx];
        auto &a1 = amplitudes_[idx | bit];
        if (pauli == Pauli::kX) {
            std::swap(a0, a1);
        } else {
            // Y = [[0, -i], [i, 0]]
            auto n0 = -i_unit * a1;
            auto n1 = i_unit * a0;
            a0 = n0;
            a1 = n1;
        }
    }
}

Pauli SubState::apply_pauli_trajectory(const PauliNoiseParams &params, Qubit qubit, Rng &rng) {
    double u = uniform01(rng);
    Pauli pauli = Pauli::kI;
    if (u < params.px) {
        pauli = Pauli::kX;
    } else if (u < params.px + params.py) {
        pauli = Pauli::kY;
    } else if (u < params.px + params.py + params.pz) {
        pauli = Pauli::kZ;
    }
    apply_pauli(pauli, qubit);
    return pauli;
}

void SubState::walsh_hadamard() {
    const size_t dim = amplitudes_.size();
    for (size_t h = 1; h < dim; h <<= 1) {
        for (size_t i = 0; i < dim; i += h << 1) {
            for (size_t j = i; j < i + h; j++) {
                auto x = amplitudes_[j];
                auto y = amplitudes_[j + h];
                amplitudes_[j] = x + y;
                amplitudes_[j + h] = x - y;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (auto &a : amplitudes_) {
        a *= scale;
    }
}

std::vector<uint8_t> SubState::hadamard_measure(Rng &rng) {
    double norm = norm_squared();
    if (std::abs(norm - 1.0) > 1e-6) {
        throw std::runtime_error("State norm drifted to " + std::to_string(norm) + ".");
    }
    walsh_hadamard();
    double u = uniform01(rng) * norm;
    // Rounding can leave u above the final partial sum; fall back to the
    // last outcome with nonzero weight.
    size_t chosen = amplitudes_.size();
    size_t last_nonzero = 0;
    double acc = 0;
    for (size_t idx = 0; idx < amplitudes_.size(); idx++) {
        double w = std::norm(amplitudes_[idx]);
        if (w > 0) {
            last_nonzero = idx;
        }
        acc += w;
        if (u < acc) {
            chosen = idx;
            break;
        }
    }
    if (chosen == amplitudes_.size()) {
        chosen = last_nonzero;
    }
    const size_t l = qubits_.size();
    std::vector<uint8_t> bits(l);
    for (size_t i = 0; i < l; i++) {
        bits[i] = static_cast<uint8_t>((chosen >> (l - 1 - i)) & 1);
    }
    return bits;
}

}  // namespace niqp
