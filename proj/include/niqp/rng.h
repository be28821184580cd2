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

#ifndef NIQP_RNG_H
#define NIQP_RNG_H

#include <cstdint>
#include <random>

namespace niqp {

using Rng = std::mt19937_64;

/// Stream splitting rule: task `index` under master seed `seed` is seeded with
/// splitmix64(splitmix64(seed) ^ splitmix64(index + 1)). Any shot or trial can
/// therefore be replayed in isolation from (seed, index).
Rng derive_stream(uint64_t seed, uint64_t index);

uint64_t splitmix64(uint64_t x);

/// Uniform double in [0, 1).
inline double uniform01(Rng &rng) {
    return std::generate_canonical<double, 53>(rng);
}

inline bool fair_bit(Rng &rng) {
    return (rng() >> 63) != 0;
}

}  // namespace niqp

#endif  // NIQP_RNG_H
