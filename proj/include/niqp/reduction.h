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

#ifndef NIQP_REDUCTION_H
#define NIQP_REDUCTION_H

#include <span>
#include <vector>

#include "niqp/circuit.h"
#include "niqp/rng.h"

namespace niqp {

/// Per-qubit initial state record. Starts all kPlus; a cell leaves kPlus
/// only through dephasing and afterwards only flips between kZero and kOne.
class ClassicalFrontier {
   public:
    explicit ClassicalFrontier(size_t num_qubits) : cells_(num_qubits, QubitInit::kPlus) {
    }

    QubitInit operator[](Qubit q) const {
        return cells_[q];
    }
    bool is_classical(Qubit q) const {
        return cells_[q] != QubitInit::kPlus;
    }
    bool bit(Qubit q) const {
        return cells_[q] == QubitInit::kOne;
    }
    void set_bit(Qubit q, bool value) {
        cells_[q] = value ? QubitInit::kOne : QubitInit::kZero;
    }
    size_t size() const {
        return cells_.size();
    }
    const std::vector<QubitInit> &cells() const {
        return cells_;
    }

   private:
    std::vector<QubitInit> cells_;
};

/// Temporally ordered channels acting only on kPlus qubits of `frontier`.
struct ReducedCircuit {
    size_t num_qubits;
    std::vector<Channel> channels;
    ClassicalFrontier frontier;
};

struct FixedBit {
    Qubit qubit;
    bool value;
};

/// Restricts a diagonal gate to the qubits not listed in `fixed` by selecting
/// the slice of its phase vector where the fixed qubits take their values.
///
/// Throws std::invalid_argument if `fixed` covers the whole support (such a
/// gate only contributes a global phase and the caller should drop it) or
/// names a qubit outside the support.
DiagonalGate restrict_gate(const DiagonalGate &gate, std::span<const FixedBit> fixed);

/// Flips `bit` with probability pX + pY: X and Y act as bit flips on a basis
/// state, I and Z act trivially.
bool classical_noise_flip(const PauliNoiseParams &params, bool bit, Rng &rng);

/// Samples a noise branch for every channel, turns dephased qubits into
/// uniformly random classical bits, and walks the circuit in temporal order
/// restricting gates and resolving noise on classical qubits.
ReducedCircuit reduce(const Circuit &c, Rng &rng);

}  // namespace niqp

#endif  // NIQP_REDUCTION_H
