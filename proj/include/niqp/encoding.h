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

#ifndef NIQP_ENCODING_H
#define NIQP_ENCODING_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "niqp/circuit.h"
#include "niqp/rng.h"

namespace niqp {

/// Repetition code with generator [I I ... I]: physical qubit j * n + i is
/// copy j of logical qubit i.
struct RepetitionCode {
    size_t n;
    size_t r;

    size_t physical_qubits() const {
        return n * r;
    }
    Qubit physical(Qubit logical, size_t copy) const {
        return static_cast<Qubit>(copy * n + logical);
    }
};

/// Returns theta if the gate equals exp(i theta Z...Z) on its support up to a
/// global phase (tolerance `tol`, angles mod 2 pi).
std::optional<double> z_string_angle(const DiagonalGate &gate, double tol = 1e-9);

/// Replaces each Z-string rotation on logical support S by the same rotation
/// on all r copies of S. Throws std::invalid_argument on noise channels,
/// non-Z-string gates or r == 0. Any r >= 1 is accepted here; decoding needs
/// odd r.
Circuit encode_circuit(const Circuit &c, size_t r);

/// Per-block majority vote. Throws std::invalid_argument for even r or a
/// length other than n * r.
std::vector<uint8_t> decode_majority(std::span<const uint8_t> bits, const RepetitionCode &code);

/// (4 q (1 - q))^{r / 2}. Throws std::domain_error unless q is in [0, 1/2].
double p_fail_bound(double q, double r);

/// Flips every bit independently with probability q.
void apply_bitflips(std::vector<uint8_t> &bits, double q, Rng &rng);

/// exp(i eighths * pi / 8 * Z_support).
struct ZRotation {
    std::vector<Qubit> support;
    int eighths;
};

struct LocalityReduction {
    /// Layers of pairwise disjoint rotations with support size <= 3.
    std::vector<std::vector<ZRotation>> layers;
    /// Global phase in units of pi / 8, kept so phase tables match exactly.
    int global_phase_eighths = 0;
};

/// Rewrites exp(i m pi / 8 Z^{(x)k}) as layers of <= 3-local Z-string
/// rotations whose summed phase function equals the input mod 2 pi.
///
/// Odd m requires k divisible by 3 and yields at most k^2 / 2 layers;
/// m = 2 mod 4 requires even k and yields at most k layers. Multiples of
/// pi / 2 need only single-qubit rotations. Throws std::invalid_argument when
/// the divisibility condition fails, and std::logic_error if a layer bound is
/// exceeded.
LocalityReduction reduce_locality(std::span<const Qubit> support, int eighths);

/// Phase (units of pi / 8, mod 16) that `rotations` apply to the basis state
/// where qubit support[i] takes bit (x >> (k - 1 - i)) & 1.
int rotation_phase_eighths(std::span<const ZRotation> rotations, std::span<const Qubit> support, uint64_t x);

/// Applies reduce_locality to every gate wider than 3 qubits. Such gates must
/// be Z-string rotations by a multiple of pi / 8. Noise channels and gates on
/// at most 3 qubits are copied unchanged.
Circuit reduce_circuit_locality(const Circuit &c);

}  // namespace niqp

#endif  // NIQP_ENCODING_H
