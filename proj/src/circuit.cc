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

#include "niqp/circuit.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace niqp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

// Distance of an angle from the nearest multiple of 2*pi.
double angle_distance(double a) {
    double r = std::remainder(a, kTwoPi);
    return std::abs(r);
}

}  // namespace

double PauliNoiseParams::strength() const {
    return pz + std::min(px, py);
}

void PauliNoiseParams::validate() const {
    if (!(px >= 0 && py >= 0 && pz >= 0)) {
        throw std::invalid_argument("Pauli noise probabilities must be non-negative.");
    }
    // Small slack so that parameters such as 0.1 + 0.2 + 0.2 still validate.
    if (px + py + pz > 0.5 + 1e-12) {
        throw std::invalid_argument("Pauli noise requires pX + pY + pZ <= 1/2.");
    }
}

DiagonalGate::DiagonalGate(std::vector<Qubit> support, std::vector<double> phases, size_t max_locality)
    : support_(std::move(support)), phases_(std::move(phases)) {
    if (support_.empty()) {
        throw std::invalid_argument("A diagonal gate needs at least one qubit.");
    }
    if (support_.size() > max_locality || support_.size() >= 63) {
        throw std::invalid_argument("Gate on " + std::to_string(support_.size()) +
                                    " qubits exceeds the locality limit " + std::to_string(max_locality) + ".");
    }
    for (size_t i = 0; i < support_.size(); i++) {
        for (size_t j = i + 1; j < support_.size(); j++) {
            if (support_[i] == support_[j]) {
                throw std::invalid_argument("Gate support repeats qubit " + std::to_string(support_[i]) + ".");
            }
        }
    }
    if (phases_.size() != (size_t{1} << support_.size())) {
        throw std::invalid_argument("Gate on " + std::to_string(support_.size()) + " qubits needs " +
                                    std::to_string(size_t{1} << support_.size()) + " phases, got " +
                                    std::to_string(phases_.size()) + ".");
    }
}

bool DiagonalGate::acts_on(Qubit q) const {
    return std::find(support_.begin(), support_.end(), q) != support_.end();
}

bool DiagonalGate::equivalent_to(const DiagonalGate &other, double tol) const {
    if (support_ != other.support_) {
        return false;
    }
    double offset = phases_[0] - other.phases_[0];
    for (size_t j = 0; j < phases_.size(); j++) {
        if (angle_distance(phases_[j] - other.phases_[j] - offset) > tol) {
            return false;
        }
    }
    return true;
}

std::span<const Qubit> channel_support(const Channel &c) {
    if (const auto *g = std::get_if<DiagonalGate>(&c)) {
        return g->support();
    }
    return std::span<const Qubit>(&std::get<NoiseChannel>(c).qubit, 1);
}

Circuit::Circuit(size_t num_qubits, size_t max_locality) : num_qubits_(num_qubits), max_locality_(max_locality) {
}

Circuit::Circuit(size_t num_qubits, std::vector<Layer> layers, size_t max_locality)
    : num_qubits_(num_qubits), max_locality_(max_locality) {
    layers_.reserve(layers.size());
    for (auto &layer : layers) {
        append_layer(std::move(layer));
    }
}

void Circuit::append_layer(Layer layer) {
    std::vector<bool> used(num_qubits_, false);
    for (const auto &c : layer) {
        if (const auto *g = std::get_if<DiagonalGate>(&c); g != nullptr && g->locality() > max_locality_) {
            throw std::invalid_argument("Gate locality " + std::to_string(g->locality()) + " exceeds k_max " +
                                        std::to_string(max_locality_) + ".");
        }
        if (const auto *n = std::get_if<NoiseChannel>(&c)) {
            n->params.validate();
        }
        for (Qubit q : channel_support(c)) {
            if (q >= num_qubits_) {
                throw std::invalid_argument("Qubit " + std::to_string(q) + " is out of range for a " +
                                            std::to_string(num_qubits_) + "-qubit circuit.");
            }
            if (used[q]) {
                throw std::invalid_argument("Overlapping supports on qubit " + std::to_string(q) +
                                            " within one layer.");
            }
            used[q] = true;
        }
    }
    layers_.push_back(std::move(layer));
}

size_t Circuit::gate_depth() const {
    size_t d = 0;
    for (const auto &layer : layers_) {
        if (std::any_of(layer.begin(), layer.end(), [](const Channel &c) {
                return std::holds_alternative<DiagonalGate>(c);
            })) {
            d++;
        }
    }
    return d;
}

size_t Circuit::locality() const {
    size_t k = 0;
    for (const auto &layer : layers_) {
        for (const auto &c : layer) {
            if (const auto *g = std::get_if<DiagonalGate>(&c)) {
                k = std::max(k, g->locality());
            }
        }
    }
    return k;
}

bool Circuit::has_noise() const {
    for (const auto &layer : layers_) {
        for (const auto &c : layer) {
            if (std::holds_alternative<NoiseChannel>(c)) {
                return true;
            }
        }
    }
    return false;
}

size_t Circuit::num_channels() const {
    size_t total = 0;
    for (const auto &layer : layers_) {
        total += layer.size();
    }
    return total;
}

std::optional<double> Circuit::min_noise_strength() const {
    std::optional<double> result;
    for (const auto &layer : layers_) {
        for (const auto &c : layer) {
            if (const auto *n = std::get_if<NoiseChannel>(&c)) {
                double p = n->params.strength();
                if (!result.has_value() || p < *result) {
                    result = p;
                }
            }
        }
    }
    return result;
}

std::vector<double> z_string_phases(size_t k, double theta) {
    std::vector<double> phases(size_t{1} << k);
    for (size_t j = 0; j < phases.size(); j++) {
        phases[j] = (std::popcount(j) & 1) ? -theta : theta;
    }
    return phases;
}

namespace {

// Phase vector that is zero except `angle` on the all-ones entry.
std::vector<double> controlled_phase(size_t k, double angle) {
    std::vector<double> phases(size_t{1} << k, 0.0);
    phases.back() = angle;
    return phases;
}

void require_arity(const GateSpec &spec, size_t arity) {
    if (spec.qubits.size() != arity) {
        throw std::invalid_argument("Gate '" + spec.name + "' takes " + std::to_string(arity) + " qubit(s), got " +
                                    std::to_string(spec.qubits.size()) + ".");
    }
}

double require_theta(const GateSpec &spec) {
    if (!spec.theta.has_value()) {
        throw std::invalid_argument("Gate '" + spec.name + "' needs an angle theta.");
    }
    return *spec.theta;
}

}  // namespace

DiagonalGate make_gate(const GateSpec &spec, size_t max_locality) {
    const std::string &name = spec.name;
    if (name != "diag" && !spec.phases.empty()) {
        throw std::invalid_argument("Only 'diag' gates take an explicit phase vector.");
    }
    if (name == "diag") {
        return DiagonalGate(spec.qubits, spec.phases, max_locality);
    }

    struct Fixed {
        const char *name;
        size_t arity;
        double angle;
    };
    static constexpr Fixed kFixed[] = {
        {"z", 1, kPi},        {"s", 1, kPi / 2},   {"sdg", 1, -kPi / 2}, {"t", 1, kPi / 4},
        {"tdg", 1, -kPi / 4}, {"cz", 2, kPi},      {"cs", 2, kPi / 2},   {"csdg", 2, -kPi / 2},
        {"ccz", 3, kPi},
    };
    for (const auto &f : kFixed) {
        if (name == f.name) {
            require_arity(spec, f.arity);
            if (spec.theta.has_value()) {
                throw std::invalid_argument("Gate '" + name + "' takes no angle.");
            }
            return DiagonalGate(spec.qubits, controlled_phase(f.arity, f.angle), max_locality);
        }
    }
    if (name == "cp") {
        require_arity(spec, 2);
        return DiagonalGate(spec.qubits, controlled_phase(2, require_theta(spec)), max_locality);
    }
    if (name == "rz" || name == "rzz" || name == "rzk") {
        if (name == "rz") {
            require_arity(spec, 1);
        } else if (name == "rzz") {
            require_arity(spec, 2);
        } else if (spec.qubits.empty()) {
            throw std::invalid_argument("Gate 'rzk' needs at least one qubit.");
        }
        double theta = require_theta(spec);
        if (spec.qubits.size() > max_locality) {
            throw std::invalid_argument("Gate 'rzk' exceeds the locality limit.");
        }
        return DiagonalGate(spec.qubits, z_string_phases(spec.qubits.size(), theta), max_locality);
    }
    throw std::invalid_argument("Unknown gate name '" + name + "'.");
}

Circuit build_circuit(size_t num_qubits, const std::vector<std::vector<GateSpec>> &layers, size_t max_locality) {
    Circuit c(num_qubits, max_locality);
    for (const auto &specs : layers) {
        Layer layer;
        layer.reserve(specs.size());
        for (const auto &spec : specs) {
            layer.emplace_back(make_gate(spec, max_locality));
        }
        c.append_layer(std::move(layer));
    }
    return c;
}

Circuit intersperse_noise(const Circuit &c, const PauliNoiseParams &params) {
    params.validate();
    if (c.has_noise()) {
        throw std::invalid_argument("Circuit already contains noise channels.");
    }
    Circuit out(c.num_qubits(), c.max_locality());
    for (const auto &layer : c.layers()) {
        bool has_gate = std::any_of(layer.begin(), layer.end(), [](const Channel &ch) {
            return std::holds_alternative<DiagonalGate>(ch);
        });
        out.append_layer(layer);
        if (has_gate) {
            Layer noise;
            noise.reserve(c.num_qubits());
            for (size_t q = 0; q < c.num_qubits(); q++) {
                noise.emplace_back(NoiseChannel{static_cast<Qubit>(q), params});
            }
            out.append_layer(std::move(noise));
        }
    }
    return out;
}

InteractionGraph::InteractionGraph(size_t num_vertices) : adjacency_(num_vertices) {
}

bool InteractionGraph::has_edge(Qubit a, Qubit b) const {
    const auto &adj = adjacency_[a];
    return std::find(adj.begin(), adj.end(), b) != adj.end();
}

void InteractionGraph::add_edge(Qubit a, Qubit b) {
    if (a == b || has_edge(a, b)) {
        return;
    }
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
}

void InteractionGraph::add_clique(std::span<const Qubit> vertices) {
    for (size_t i = 0; i < vertices.size(); i++) {
        for (size_t j = i + 1; j < vertices.size(); j++) {
            add_edge(vertices[i], vertices[j]);
        }
    }
}

size_t InteractionGraph::max_degree() const {
    size_t m = 0;
    for (const auto &adj : adjacency_) {
        m = std::max(m, adj.size());
    }
    return m;
}

size_t InteractionGraph::num_edges() const {
    size_t total = 0;
    for (const auto &adj : adjacency_) {
        total += adj.size();
    }
    return total / 2;
}

InteractionGraph interaction_graph(const Circuit &c) {
    InteractionGraph g(c.num_qubits());
    for (const auto &layer : c.layers()) {
        for (const auto &ch : layer) {
            if (const auto *gate = std::get_if<DiagonalGate>(&ch)) {
                g.add_clique(gate->support());
            }
        }
    }
    return g;
}

}  // namespace niqp
