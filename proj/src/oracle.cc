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

#include "niqp/oracle.h"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace niqp {

namespace {

using cd = std::complex<double>;

// Row-major 2^n x 2^n density matrix; basis index bit (n - 1 - q) is qubit q.
class DensityMatrix {
   public:
    DensityMatrix(size_t n, std::span<const QubitInit> initial) : n_(n), dim_(size_t{1} << n), data_(dim_ * dim_) {
        // Product of exact single-qubit density matrices.
        for (size_t a = 0; a < dim_; a++) {
            for (size_t b = 0; b < dim_; b++) {
                double v = 1.0;
                for (size_t q = 0; q < n_ && v != 0.0; q++) {
                    bool ba = (a >> (n_ - 1 - q)) & 1;
                    bool bb = (b >> (n_ - 1 - q)) & 1;
                    switch (initial[q]) {
                        case QubitInit::kPlus:
                            v *= 0.5;
                            break;
                        case QubitInit::kZero:
                            v *= (!ba && !bb) ? 1.0 : 0.0;
                            break;
                        case QubitInit::kOne:
                            v *= (ba && bb) ? 1.0 : 0.0;
                            break;
                    }
                }
                at(a, b) = v;
            }
        }
    }

    cd &at(size_t a, size_t b) {
        return data_[a * dim_ + b];
    }

    void apply_gate(const DiagonalGate &g) {
        std::vector<cd> phase(dim_);
        const auto &support = g.support();
        for (size_t idx = 0; idx < dim_; idx++) {
            size_t j = 0;
            for (Qubit q : support) {
                j = (j << 1) | ((idx >> (n_ - 1 - q)) & 1);
            }
            phase[idx] = std::polar(1.0, g.phases()[j]);
        }
        for (size_t a = 0; a < dim_; a++) {
            for (size_t b = 0; b < dim_; b++) {
                at(a, b) *= phase[a] * std::conj(phase[b]);
            }
        }
    }

    void apply_noise(const NoiseChannel &ch) {
        const size_t m = size_t{1} << (n_ - 1 - ch.qubit);
        const auto &p = ch.params;
        std::vector<cd> out(data_.size());
        for (size_t a = 0; a < dim_; a++) {
            for (size_t b = 0; b < dim_; b++) {
                double sa = (a & m) ? -1.0 : 1.0;
                double sb = (b & m) ? -1.0 : 1.0;
                cd flipped = data_[(a ^ m) * dim_ + (b ^ m)];
                cd v = p.pi() * data_[a * dim_ + b];
                v += p.px * flipped;
                // Y rho Y = X Z rho Z X: entry (a, b) picks up the Z signs of
                // the pre-flip indices a ^ m, b ^ m.
                v += p.py * (-sa) * (-sb) * flipped;
                v += p.pz * sa * sb * data_[a * dim_ + b];
                out[a * dim_ + b] = v;
            }
        }
        data_.swap(out);
    }

    // Diagonal of H^n rho H^n.
    std::vector<double> hadamard_probabilities() {
        // Transform rows then columns with the unnormalized Walsh-Hadamard
        // butterfly; total scale 1 / 2^n.
        for (size_t a = 0; a < dim_; a++) {
            butterfly(&data_[a * dim_], 1);
        }
        for (size_t b = 0; b < dim_; b++) {
            butterfly(&data_[b], dim_);
        }
        std::vector<double> probs(dim_);
        for (size_t x = 0; x < dim_; x++) {
            double v = at(x, x).real() / static_cast<double>(dim_);
            probs[x] = v < 0 ? 0.0 : v;
        }
        return probs;
    }

   private:
    void butterfly(cd *base, size_t stride) {
        for (size_t h = 1; h < dim_; h <<= 1) {
            for (size_t i = 0; i < dim_; i += h << 1) {
                for (size_t j = i; j < i + h; j++) {
                    cd x = base[j * stride];
                    cd y = base[(j + h) * stride];
                    base[j * stride] = x + y;
                    base[(j + h) * stride] = x - y;
                }
            }
        }
    }

    size_t n_;
    size_t dim_;
    std::vector<cd> data_;
};

}  // namespace

ExactDistribution exact_distribution(const Circuit &c, size_t max_qubits) {
    std::vector<QubitInit> plus(c.num_qubits(), QubitInit::kPlus);
    return exact_distribution(c, plus, max_qubits);
}

ExactDistribution exact_distribution(const Circuit &c, std::span<const QubitInit> initial, size_t max_qubits) {
    const size_t n = c.num_qubits();
    if (n > max_qubits) {
        throw std::invalid_argument("Oracle supports at most " + std::to_string(max_qubits) + " qubits, got " +
                                    std::to_string(n) + ".");
    }
    if (initial.size() != n) {
        throw std::invalid_argument("Initial state must list one entry per qubit.");
    }
    DensityMatrix rho(n, initial);
    for (const auto &layer : c.layers()) {
        for (const auto &ch : layer) {
            if (const auto *g = std::get_if<DiagonalGate>(&ch)) {
                rho.apply_gate(*g);
            } else {
                rho.apply_noise(std::get<NoiseChannel>(ch));
            }
        }
    }
    return ExactDistribution{n, rho.hadamard_probabilities()};
}

uint64_t outcome_index(std::span<const uint8_t> bits) {
    uint64_t idx = 0;
    for (uint8_t b : bits) {
        idx = (idx << 1) | (b & 1);
    }
    return idx;
}

ExactDistribution empirical_distribution(size_t num_qubits, std::span<const std::vector<uint8_t>> outcomes) {
    if (num_qubits >= 40) {
        throw std::invalid_argument("Histogram over more than 2^40 outcomes is not supported.");
    }
    ExactDistribution out{num_qubits, std::vector<double>(size_t{1} << num_qubits, 0.0)};
    if (outcomes.empty()) {
        return out;
    }
    for (const auto &o : outcomes) {
        if (o.size() != num_qubits) {
            throw std::invalid_argument("Outcome length does not match qubit count.");
        }
        out.probs[outcome_index(o)] += 1.0;
    }
    for (auto &v : out.probs) {
        v /= static_cast<double>(outcomes.size());
    }
    return out;
}

double tvd(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("tvd: distributions have different sizes.");
    }
    double total = 0;
    for (size_t i = 0; i < a.size(); i++) {
        total += std::abs(a[i] - b[i]);
    }
    return 0.5 * total;
}

double tvd(const ExactDistribution &a, const ExactDistribution &b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("tvd: distributions are over different qubit counts.");
    }
    return tvd(a.probs, b.probs);
}

}  // namespace niqp
