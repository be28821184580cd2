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

#ifndef NIQP_STATEVECTOR_H
#define NIQP_STATEVECTOR_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "niqp/circuit.h"
#include "niqp/rng.h"

namespace niqp {

inline constexpr size_t kDefaultMaxSubsystemQubits = 30;

enum class Pauli : uint8_t { kI, kX, kY, kZ };

/// Dense state of a subset of the circuit's qubits.
///
/// qubits()[0] is the most significant bit of the amplitude index, matching
/// the gate-support convention.
class SubState {
   public:
    /// |+>^{l} on the given qubits. Throws ResourceError when
    /// qubits.size() > max_qubits.
    explicit SubState(std::vector<Qubit> qubits, size_t max_qubits = kDefaultMaxSubsystemQubits);

    /// Takes ownership of explicit amplitudes; size must be 2^{qubits.size()}.
    SubState(std::vector<Qubit> qubits, std::vector<std::complex<double>> amplitudes);

    const std::vector<Qubit> &qubits() const {
        return qubits_;
    }
    std::span<const std::complex<double>> amplitudes() const {
        return amplitudes_;
    }
    double norm_squared() const;

    /// Multiplies each amplitude by exp(i theta) of the gate's phase at the
    /// amplitude's restriction to the gate support. Throws
    /// std::invalid_argument when the support is not inside qubits().
    void apply_diagonal(const DiagonalGate &gate);

    void apply_pauli(Pauli pauli, Qubit qubit);

    /// Inserts I/X/Y/Z with probabilities (pI, pX, pY, pZ). Returns the Pauli
    /// applied.
    Pauli apply_pauli_trajectory(const PauliNoiseParams &params, Qubit qubit, Rng &rng);

    /// Normalized in-place Walsh-Hadamard transform, O(l 2^l).
    void walsh_hadamard();

    /// Hadamard-basis measurement of every qubit; result[i] is the outcome
    /// of qubits()[i]. Leaves the state transformed. Throws
    /// std::runtime_error if the norm is off by more than 1e-6.
    std::vector<uint8_t> hadamard_measure(Rng &rng);

   private:
    size_t local_position(Qubit q) const;

    std::vector<Qubit> qubits_;
    std::vector<std::complex<double>> amplitudes_;
};

}  // namespace niqp

#endif  // NIQP_STATEVECTOR_H
