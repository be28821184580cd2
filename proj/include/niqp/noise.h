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

#ifndef NIQP_NOISE_H
#define NIQP_NOISE_H

#include <array>
#include <complex>
#include <optional>
#include <variant>

#include "niqp/circuit.h"
#include "niqp/rng.h"

namespace niqp {

/// Splits N_{pX,pY,pZ} into a mixture
///
///     N = (1 - 2p) N1 + 2p N2 o N_{0,0,1/2},      p = pZ + min(pX, pY),
///
/// where N1 is a pure X (or Y) flip channel and N2 a pure X flip channel.
struct NoiseDecomposition {
    double dephase_probability;  // 2p
    PauliNoiseParams survive;    // N1
    /// N2; absent when p == 0 and the dephasing branch never occurs.
    std::optional<PauliNoiseParams> after_dephase;
};

NoiseDecomposition decompose(const PauliNoiseParams &params);

/// The channel kept on the qubit when the dephasing branch is not taken.
struct Survive {
    PauliNoiseParams channel;
};
/// The qubit is completely dephased; `channel` is applied after.
struct Dephase {
    PauliNoiseParams channel;
};
using BranchOutcome = std::variant<Survive, Dephase>;

/// Draws Dephase with probability exactly 2p. Consumes one uniform draw.
BranchOutcome sample_branch(const PauliNoiseParams &params, Rng &rng);
BranchOutcome sample_branch(const NoiseDecomposition &decomposition, Rng &rng);

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<std::complex<double>, 4>;

/// Exact single-qubit channel action; used to check the mixture identity.
Matrix2 apply_channel_dense(const PauliNoiseParams &params, const Matrix2 &rho);

/// rho -> (rho + Z rho Z) / 2.
Matrix2 completely_dephase(const Matrix2 &rho);

}  // namespace niqp

#endif  // NIQP_NOISE_H
