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

#ifndef NIQP_ORACLE_H
#define NIQP_ORACLE_H

#include <cstdint>
#include <span>
#include <vector>

#include "niqp/circuit.h"

namespace niqp {

inline constexpr size_t kMaxOracleQubits = 10;

/// Probability vector over n-bit outcomes. Index bit (n - 1 - q) holds the
/// outcome of qubit q, so qubit 0 is the most significant bit.
struct ExactDistribution {
    size_t num_qubits = 0;
    std::vector<double> probs;
};

/// Brute-force density-matrix evolution from |+><+|^n (or the given product
/// of |0>, |1>, |+>) through every gate and noise channel, followed by
/// Hadamard-basis Born probabilities. Throws std::invalid_argument above
/// max_qubits.
ExactDistribution exact_distribution(const Circuit &c, size_t max_qubits = kMaxOracleQubits);
ExactDistribution exact_distribution(const Circuit &c, std::span<const QubitInit> initial,
                                     size_t max_qubits = kMaxOracleQubits);

/// Histogram of sampled outcomes (outcome[q] is qubit q's bit).
ExactDistribution empirical_distribution(size_t num_qubits, std::span<const std::vector<uint8_t>> outcomes);

uint64_t outcome_index(std::span<const uint8_t> bits);

/// 1/2 sum_i |a_i - b_i|. Throws std::invalid_argument on size mismatch.
double tvd(std::span<const double> a, std::span<const double> b);
double tvd(const ExactDistribution &a, const ExactDistribution &b);

}  // namespace niqp

#endif  // NIQP_ORACLE_H
