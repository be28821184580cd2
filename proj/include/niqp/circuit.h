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

#ifndef NIQP_CIRCUIT_H
#define NIQP_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace niqp {

using Qubit = uint32_t;

inline constexpr size_t kDefaultMaxLocality = 8;

/// Single-qubit Pauli channel rho -> pI rho + pX XrhoX + pY YrhoY + pZ ZrhoZ.
struct PauliNoiseParams {
    double px = 0;
    double py = 0;
    double pz = 0;

    double pi() const {
        return 1.0 - px - py - pz;
    }
    /// Effective dephasing strength p = pZ + min(pX, pY).
    double strength() const;
    bool is_identity() const {
        return px == 0 && py == 0 && pz == 0;
    }
    /// Throws std::invalid_argument unless all probabilities are
    /// non-negative and pX + pY + pZ <= 1/2.
    void validate() const;

    static PauliNoiseParams dephasing(double q) {
        return {0, 0, q};
    }
    static PauliNoiseParams depolarizing(double q) {
        return {q, q, q};
    }
    bool operator==(const PauliNoiseParams &) const = default;
};

/// Diagonal unitary sum_j exp(i phases[j]) |j><j| on `support`.
///
/// Bit ordering: support[0] is the most significant bit of j. For example a
/// gate on support {3, 5} assigns phases[0b10] to the basis state with qubit 3
/// set and qubit 5 clear.
class DiagonalGate {
   public:
    DiagonalGate(std::vector<Qubit> support, std::vector<double> phases,
                 size_t max_locality = kDefaultMaxLocality);

    const std::vector<Qubit> &support() const {
        return support_;
    }
    const std::vector<double> &phases() const {
        return phases_;
    }
    size_t locality() const {
        return support_.size();
    }
    bool acts_on(Qubit q) const;

    /// Same unitary up to a global phase, comparing angles mod 2*pi.
    bool equivalent_to(const DiagonalGate &other, double tol = 1e-12) const;
    bool operator==(const DiagonalGate &) const = default;

   private:
    std::vector<Qubit> support_;
    std::vector<double> phases_;
};

struct NoiseChannel {
    Qubit qubit;
    PauliNoiseParams params;
    bool operator==(const NoiseChannel &) const = default;
};

using Channel = std::variant<DiagonalGate, NoiseChannel>;
using Layer = std::vector<Channel>;

/// Qubits touched by a channel, in the channel's own order.
std::span<const Qubit> channel_support(const Channel &c);

/// Per-qubit initial state. Circuits start from all kPlus.
enum class QubitInit : uint8_t { kZero, kOne, kPlus };

/// A noisy IQP circuit: layers applied in order, each layer a list of
/// channels with pairwise disjoint supports.
class Circuit {
   public:
    explicit Circuit(size_t num_qubits, size_t max_locality = kDefaultMaxLocality);
    Circuit(size_t num_qubits, std::vector<Layer> layers, size_t max_locality = kDefaultMaxLocality);

    /// Validates and appends. Throws std::invalid_argument on out-of-range
    /// qubits, overlapping supports, or gates wider than max_locality.
    void append_layer(Layer layer);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t max_locality() const {
        return max_locality_;
    }
    const std::vector<Layer> &layers() const {
        return layers_;
    }

    /// Number of layers that contain at least one gate (d).
    size_t gate_depth() const;
    /// Largest gate support size (k); 0 for a gate-free circuit.
    size_t locality() const;
    bool has_noise() const;
    size_t num_channels() const;
    /// Smallest effective strength among the noise channels; nullopt if none.
    std::optional<double> min_noise_strength() const;

    bool operator==(const Circuit &) const = default;

   private:
    size_t num_qubits_;
    size_t max_locality_;
    std::vector<Layer> layers_;
};

/// Named-gate description as read from a circuit file.
///
/// Angles use the convention exp(i * theta * Z...Z): rz, rzz and rzk are
/// Z-string rotations on 1, 2 and any number of qubits; cp is diag(1, 1, 1,
/// e^{i theta}). "diag" takes an explicit phase vector.
struct GateSpec {
    std::string name;
    std::vector<Qubit> qubits;
    std::optional<double> theta;
    std::vector<double> phases;
};

/// Expands a named gate into its phase vector. Throws std::invalid_argument on
/// unknown names or wrong arity.
DiagonalGate make_gate(const GateSpec &spec, size_t max_locality = kDefaultMaxLocality);

/// Phase vector theta * (-1)^{|j|} of exp(i theta Z^{(x)k}).
std::vector<double> z_string_phases(size_t k, double theta);

Circuit build_circuit(size_t num_qubits, const std::vector<std::vector<GateSpec>> &layers,
                      size_t max_locality = kDefaultMaxLocality);

/// Inserts, after every gate layer, a layer with one noise channel per qubit.
/// Throws std::invalid_argument if the circuit already contains noise.
Circuit intersperse_noise(const Circuit &c, const PauliNoiseParams &params);

/// Qubits are vertices; an edge joins two qubits sharing a gate.
class InteractionGraph {
   public:
    explicit InteractionGraph(size_t num_vertices);

    /// Adds the clique on `vertices`. Self-loops are ignored.
    void add_clique(std::span<const Qubit> vertices);
    void add_edge(Qubit a, Qubit b);

    size_t num_vertices() const {
        return adjacency_.size();
    }
    const std::vector<Qubit> &neighbors(Qubit v) const {
        return adjacency_[v];
    }
    size_t degree(Qubit v) const {
        return adjacency_[v].size();
    }
    size_t max_degree() const;
    size_t num_edges() const;
    bool has_edge(Qubit a, Qubit b) const;

   private:
    std::vector<std::vector<Qubit>> adjacency_;
};

InteractionGraph interaction_graph(const Circuit &c);

}  // namespace niqp

#endif  // NIQP_CIRCUIT_H
