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

#include "niqp/encoding.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace niqp {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
    // Into (-pi, pi].
    double w = std::remainder(a, 2 * kPi);
    return w == -kPi ? kPi : w;
}

int mod16(long long v) {
    long long m = v % 16;
    return static_cast<int>(m < 0 ? m + 16 : m);
}

long long binom(int n, int r) {
    if (r < 0 || r > n) {
        return 0;
    }
    long long out = 1;
    for (int i = 1; i <= r; i++) {
        out = out * (n - r + i) / i;
    }
    return out;
}

// 1-factorization of K_k by the circle method; for odd k a dummy vertex is
// added and its pairs dropped. Returns index pairs.
std::vector<std::vector<std::array<size_t, 2>>> pair_rounds(size_t k) {
    std::vector<std::vector<std::array<size_t, 2>>> rounds;
    if (k < 2) {
        return rounds;
    }
    const size_t m = k % 2 == 0 ? k : k + 1;
    const size_t ring = m - 1;
    for (size_t r = 0; r < ring; r++) {
        std::vector<std::array<size_t, 2>> pairs;
        auto add = [&](size_t a, size_t b) {
            if (a < k && b < k) {
                pairs.push_back({std::min(a, b), std::max(a, b)});
            }
        };
        add(r, m - 1);
        for (size_t i = 1; i < m / 2; i++) {
            add((r + i) % ring, (r + ring - i) % ring);
        }
        rounds.push_back(std::move(pairs));
    }
    return rounds;
}

// Partition of all 3-subsets of {0..k-1} (3 | k) into C(k-1, 2) perfect
// matchings, found by depth-first search.
class TripleResolver {
   public:
    explicit TripleResolver(size_t k) : k_(k), used_(k * k * k, false) {
        target_layers_ = static_cast<size_t>(binom(static_cast<int>(k) - 1, 2));
        per_layer_ = k / 3;
    }

    std::vector<std::vector<std::array<size_t, 3>>> solve() {
        covered_.assign(k_, false);
        if (!search()) {
            throw std::logic_error("No resolution of the 3-subsets of a " + std::to_string(k_) +
                                   "-set was found within the search budget.");
        }
        return layers_;
    }

   private:
    size_t index(size_t a, size_t b, size_t c) const {
        return (a * k_ + b) * k_ + c;
    }

    bool search() {
        if (++nodes_ > kNodeBudget) {
            return false;
        }
        if (current_.size() == per_layer_) {
            layers_.push_back(current_);
            auto saved = current_;
            auto saved_cov = covered_;
            current_.clear();
            covered_.assign(k_, false);
            if (layers_.size() == target_layers_ || search()) {
                return true;
            }
            layers_.pop_back();
            current_ = std::move(saved);
            covered_ = std::move(saved_cov);
            return false;
        }
        if (current_.empty()) {
            // The smallest unused triple must lie in some remaining layer, so
            // it may as well open this one.
            for (size_t a = 0; a < k_; a++) {
                for (size_t b = a + 1; b < k_; b++) {
                    for (size_t c = b + 1; c < k_; c++) {
                        if (!used_[index(a, b, c)]) {
                            return place_and_search(a, b, c);
                        }
                    }
                }
            }
            return false;
        }
        size_t v = 0;
        while (covered_[v]) {
            v++;
        }
        for (size_t b = v + 1; b < k_; b++) {
            if (covered_[b]) {
                continue;
            }
            for (size_t c = b + 1; c < k_; c++) {
                if (covered_[c] || used_[index(v, b, c)]) {
                    continue;
                }
                if (place_and_search(v, b, c)) {
                    return true;
                }
                if (nodes_ > kNodeBudget) {
                    return false;
                }
            }
        }
        return false;
    }

    bool place_and_search(size_t a, size_t b, size_t c) {
        used_[index(a, b, c)] = true;
        covered_[a] = covered_[b] = covered_[c] = true;
        current_.push_back({a, b, c});
        if (search()) {
            return true;
        }
        current_.pop_back();
        covered_[a] = covered_[b] = covered_[c] = false;
        used_[index(a, b, c)] = false;
        return false;
    }

    static constexpr size_t kNodeBudget = 50'000'000;

    size_t k_;
    size_t target_layers_;
    size_t per_layer_;
    size_t nodes_ = 0;
    std::vector<bool> used_;
    std::vector<bool> covered_;
    std::vector<std::array<size_t, 3>> current_;
    std::vector<std::vector<std::array<size_t, 3>>> layers_;
};

}  // namespace

std::optional<double> z_string_angle(const DiagonalGate &gate, double tol) {
    const auto &ph = gate.phases();
    if (ph.size() < 2) {
        return std::nullopt;
    }
    // phases[j] = a + theta (-1)^{|j|}; index 1 has odd weight.
    const double theta = wrap_angle(ph[0] - ph[1]) / 2;
    for (size_t j = 0; j < ph.size(); j++) {
        double sign = std::popcount(j) % 2 == 0 ? 1.0 : -1.0;
        double expected = ph[0] + theta * (sign - 1.0);
        if (std::abs(wrap_angle(ph[j] - expected)) > tol) {
            return std::nullopt;
        }
    }
    return theta;
}

Circuit encode_circuit(const Circuit &c, size_t r) {
    if (r == 0) {
        throw std::invalid_argument("Repetition count must be at least 1.");
    }
    const RepetitionCode code{c.num_qubits(), r};
    Circuit out(code.physical_qubits(), std::max(c.max_locality(), c.locality() * r));
    for (const auto &layer : c.layers()) {
        Layer encoded;
        for (const auto &ch : layer) {
            const auto *g = std::get_if<DiagonalGate>(&ch);
            if (g == nullptr) {
                throw std::invalid_argument("encode_circuit expects a noiseless circuit.");
            }
            auto theta = z_string_angle(*g);
            if (!theta) {
                throw std::invalid_argument("encode_circuit supports only Z-string rotations.");
            }
            std::vector<Qubit> support;
            for (size_t copy = 0; copy < r; copy++) {
                for (Qubit q : g->support()) {
                    support.push_back(code.physical(q, copy));
                }
            }
            const size_t k = support.size();
            encoded.emplace_back(DiagonalGate(std::move(support), z_string_phases(k, *theta), out.max_locality()));
        }
        out.append_layer(std::move(encoded));
    }
    return out;
}

std::vector<uint8_t> decode_majority(std::span<const uint8_t> bits, const RepetitionCode &code) {
    if (code.r % 2 == 0) {
        throw std::invalid_argument("Majority decoding requires an odd number of repetitions.");
    }
    if (bits.size() != code.physical_qubits()) {
        throw std::invalid_argument("Expected " + std::to_string(code.physical_qubits()) + " bits, got " +
                                    std::to_string(bits.size()) + ".");
    }
    std::vector<uint8_t> out(code.n);
    for (size_t i = 0; i < code.n; i++) {
        size_t ones = 0;
        for (size_t copy = 0; copy < code.r; copy++) {
            ones += bits[code.physical(static_cast<Qubit>(i), copy)] & 1;
        }
        out[i] = 2 * ones > code.r ? 1 : 0;
    }
    return out;
}

double p_fail_bound(double q, double r) {
    if (!(q >= 0 && q <= 0.5)) {
        throw std::domain_error("Flip probability must lie in [0, 1/2].");
    }
    return std::pow(4 * q * (1 - q), r / 2);
}

void apply_bitflips(std::vector<uint8_t> &bits, double q, Rng &rng) {
    for (auto &b : bits) {
        if (uniform01(rng) < q) {
            b ^= 1;
        }
    }
}

LocalityReduction reduce_locality(std::span<const Qubit> support, int eighths) {
    const int k = static_cast<int>(support.size());
    const int m = mod16(eighths);
    if (k == 0) {
        throw std::invalid_argument("Rotation needs a nonempty support.");
    }
    // Z_S = sum_T (-2)^{|T|} prod_{i in T} x_i and x_T = 2^{-|T|} sum_{U in T}
    // (-1)^{|U|} Z_U. Terms with 2^{|T|} m = 0 mod 16 vanish mod 2 pi, so
    // |T| <= tmax where tmax is the largest t with 2^t m != 0 mod 16.
    int tmax = -1;
    while (tmax < 4 && mod16((long long)m << (tmax + 1)) != 0) {
        tmax++;
    }
    if (m % 2 == 1 && k % 3 != 0) {
        throw std::invalid_argument("Odd multiples of pi/8 need locality divisible by 3, got " + std::to_string(k) +
                                    ".");
    }
    if (m % 4 == 2 && k % 2 != 0) {
        throw std::invalid_argument("Odd multiples of pi/4 need even locality, got " + std::to_string(k) + ".");
    }
    tmax = std::min(tmax, k);

    auto coefficient = [&](int u) {
        long long total = 0;
        for (int t = u; t <= tmax; t++) {
            total += ((t + u) % 2 == 0 ? 1 : -1) * binom(k - u, t - u);
        }
        return mod16(total * m);
    };

    LocalityReduction out;
    out.global_phase_eighths = tmax >= 0 ? coefficient(0) : m;

    const int c1 = tmax >= 1 ? coefficient(1) : 0;
    if (c1 != 0) {
        std::vector<ZRotation> layer;
        for (Qubit q : support) {
            layer.push_back({{q}, c1});
        }
        out.layers.push_back(std::move(layer));
    }
    const int c2 = tmax >= 2 && k >= 2 ? coefficient(2) : 0;
    size_t pair_layers = 0;
    if (c2 != 0) {
        for (const auto &round : pair_rounds(k)) {
            std::vector<ZRotation> layer;
            for (const auto &[a, b] : round) {
                layer.push_back({{support[a], support[b]}, c2});
            }
            out.layers.push_back(std::move(layer));
            pair_layers++;
        }
    }
    const int c3 = tmax >= 3 && k >= 3 ? coefficient(3) : 0;
    size_t triple_layers = 0;
    if (c3 != 0) {
        for (const auto &round : TripleResolver(k).solve()) {
            std::vector<ZRotation> layer;
            for (const auto &[a, b, c] : round) {
                layer.push_back({{support[a], support[b], support[c]}, c3});
            }
            out.layers.push_back(std::move(layer));
            triple_layers++;
        }
    }

    if (pair_layers > static_cast<size_t>(k)) {
        throw std::logic_error("Weight-2 terms used more than k layers.");
    }
    if (triple_layers > static_cast<size_t>(binom(k - 1, 2))) {
        throw std::logic_error("Weight-3 terms used more than C(k-1, 2) layers.");
    }
    const double bound = m % 2 == 1 ? k * k / 2.0 : static_cast<double>(k);
    if (static_cast<double>(out.layers.size()) > bound) {
        throw std::logic_error("Locality reduction used " + std::to_string(out.layers.size()) +
                               " layers, above the bound " + std::to_string(bound) + ".");
    }
    return out;
}

int rotation_phase_eighths(std::span<const ZRotation> rotations, std::span<const Qubit> support, uint64_t x) {
    const size_t k = support.size();
    auto bit_of = [&](Qubit q) -> int {
        for (size_t i = 0; i < k; i++) {
            if (support[i] == q) {
                return static_cast<int>((x >> (k - 1 - i)) & 1);
            }
        }
        throw std::invalid_argument("Rotation acts outside the given support.");
    };
    long long total = 0;
    for (const auto &rot : rotations) {
        int parity = 0;
        for (Qubit q : rot.support) {
            parity ^= bit_of(q);
        }
        total += parity ? -rot.eighths : rot.eighths;
    }
    return mod16(total);
}

Circuit reduce_circuit_locality(const Circuit &c) {
    Circuit out(c.num_qubits(), c.max_locality());
    for (const auto &layer : c.layers()) {
        Layer kept;
        std::vector<LocalityReduction> expanded;
        for (const auto &ch : layer) {
            const auto *g = std::get_if<DiagonalGate>(&ch);
            if (g == nullptr || g->locality() <= 3) {
                kept.push_back(ch);
                continue;
            }
            auto theta = z_string_angle(*g);
            if (!theta) {
                throw std::invalid_argument("Locality reduction supports only Z-string rotations.");
            }
            const double units = *theta / (kPi / 8);
            const double rounded = std::round(units);
            if (std::abs(units - rounded) > 1e-9) {
                throw std::invalid_argument("Locality reduction needs a rotation angle that is a multiple of pi/8.");
            }
            expanded.push_back(reduce_locality(g->support(), static_cast<int>(rounded)));
        }
        if (!kept.empty()) {
            out.append_layer(std::move(kept));
        }
        // Gates of one layer act on disjoint qubits, so their sub-layers can be
        // merged index by index.
        size_t depth = 0;
        for (const auto &e : expanded) {
            depth = std::max(depth, e.layers.size());
        }
        for (size_t i = 0; i < depth; i++) {
            Layer merged;
            for (const auto &e : expanded) {
                if (i >= e.layers.size()) {
                    continue;
                }
                for (const auto &rot : e.layers[i]) {
                    merged.emplace_back(DiagonalGate(rot.support,
                                                     z_string_phases(rot.support.size(), rot.eighths * kPi / 8),
                                                     out.max_locality()));
                }
            }
            out.append_layer(std::move(merged));
        }
    }
    return out;
}

}  // namespace niqp
