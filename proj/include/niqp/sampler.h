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

#ifndef NIQP_SAMPLER_H
#define NIQP_SAMPLER_H

#include <cstdint>
#include <vector>

#include "niqp/circuit.h"
#include "niqp/rng.h"
#include "niqp/statevector.h"

namespace niqp {

enum class SamplingMode { kExact, kMonteCarlo };

struct SamplerOptions {
    /// Largest component simulated with a dense statevector.
    size_t max_subsystem_qubits = kDefaultMaxSubsystemQubits;
};

struct ShotResult {
    /// outcome[q] is the Hadamard-basis measurement result of qubit q.
    std::vector<uint8_t> outcome;
    size_t max_component = 0;
    /// Set only by the Monte Carlo sampler when it returned a uniform string.
    bool fell_back_uniform = false;
    /// Sum of 2^{|V_j|} over the components simulated as statevectors.
    uint64_t work_units = 0;
};

/// Samples the Hadamard-basis output distribution of a noisy IQP circuit by
/// reducing each shot to independent small components.
///
/// Two modes:
///  - exact (Las Vegas): the output is distributed exactly as the circuit's
///    output distribution; throws ResourceError if a component exceeds the
///    statevector cap.
///  - Monte Carlo: returns a uniformly random string whenever the largest
///    component exceeds ln(n / epsilon) / c_{p,k}(d), which bounds the total
///    variation error by epsilon above the percolation threshold.
class NoisyIqpSampler {
   public:
    explicit NoisyIqpSampler(Circuit circuit, SamplerOptions options = {});

    const Circuit &circuit() const {
        return circuit_;
    }

    ShotResult sample_exact(Rng &rng) const;
    ShotResult sample_monte_carlo(double epsilon, Rng &rng) const;

    /// c_{p,k}(d) from the circuit's gate depth d, locality k and the weakest
    /// noise channel p. +infinity when the circuit has no multi-qubit gates.
    double decay_rate() const;

    /// ln(n / epsilon) / c_{p,k}(d). Throws ThresholdError when c <= 0 and
    /// std::invalid_argument unless epsilon is in (0, 1).
    double monte_carlo_cutoff(double epsilon) const;

    /// Shot j draws from derive_stream(seed, j); results come back in shot
    /// order regardless of `threads`.
    std::vector<ShotResult> sample_batch(SamplingMode mode, size_t shots, uint64_t seed, double epsilon = 0.0,
                                         size_t threads = 1) const;

   private:
    struct Prepared;
    void simulate_components(const Prepared &prepared, Rng &rng, ShotResult &result) const;

    Circuit circuit_;
    SamplerOptions options_;
};

/// Analytic expected-work bound c d n^5, valid for d >= d_c(p, k). Throws
/// ThresholdError for shallower circuits.
double expected_runtime_bound(size_t n, size_t d, double p, int k, double constant = 1.0);

}  // namespace niqp

#endif  // NIQP_SAMPLER_H
