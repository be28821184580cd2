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

#include "niqp/noise.h"

#include <algorithm>
#include <cmath>

namespace niqp {

NoiseDecomposition decompose(const PauliNoiseParams &params) {
    const double p = params.strength();
    const double survive_weight = 1.0 - 2.0 * p;
    const double diff = std::abs(params.px - params.py);

    NoiseDecomposition out{2.0 * p, PauliNoiseParams{}, std::nullopt};
    // survive_weight == 0 means the survive branch has probability zero; its
    // channel is then irrelevant and left as the identity.
    if (survive_weight > 0 && diff > 0) {
        double flip = std::min(1.0, diff / survive_weight);
        if (params.px >= params.py) {
            out.survive.px = flip;
        } else {
            out.survive.py = flip;
        }
    }
    if (p > 0) {
        out.after_dephase = PauliNoiseParams{std::min(params.px, params.py) / p, 0, 0};
    }
    return out;
}

BranchOutcome sample_branch(const NoiseDecomposition &decomposition, Rng &rng) {
    double u = uniform01(rng);
    if (decomposition.after_dephase.has_value() && u < decomposition.dephase_probability) {
        return Dephase{*decomposition.after_dephase};
    }
    return Survive{decomposition.survive};
}

BranchOutcome sample_branch(const PauliNoiseParams &params, Rng &rng) {
    return sample_branch(decompose(params), rng);
}

Matrix2 apply_channel_dense(const PauliNoiseParams &params, const Matrix2 &rho) {
    const auto &[a, b, c, d] = rho;
    // X rho X = [[d, c], [b, a]],  Y rho Y = [[d, -c], [-b, a]],
    // Z rho Z = [[a, -b], [-c, d]].
    const double pi = params.pi();
    const double px = params.px;
    const double py = params.py;
    const double pz = params.pz;
    return Matrix2{
        pi * a + px * d + py * d + pz * a,
        pi * b + px * c - py * c - pz * b,
        pi * c + px * b - py * b - pz * c,
        pi * d + px * a + py * a + pz * d,
    };
}

Matrix2 completely_dephase(const Matrix2 &rho) {
    return Matrix2{rho[0], 0.0, 0.0, rho[3]};
}

}  // namespace niqp
