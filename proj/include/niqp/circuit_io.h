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

#ifndef NIQP_CIRCUIT_IO_H
#define NIQP_CIRCUIT_IO_H

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "niqp/circuit.h"
#include "niqp/oracle.h"
#include "niqp/percolation.h"

namespace niqp {

/// Parsed circuit document.
///
/// JSON layout:
///   {"n": 3,
///    "max_locality": 8,                       (optional)
///    "noise": {"px": 0, "py": 0, "pz": 0.1},  (optional)
///    "layers": [[{"gate": "cz", "qubits": [0, 1]},
///                {"gate": "rz", "qubits": [2], "theta": 0.3}],
///               [{"gate": "diag", "qubits": [0], "phases": [0, 1.2]},
///                {"gate": "noise", "qubits": [1], "px": 0.1, "py": 0, "pz": 0}]]}
///
/// Top-level "noise" is applied by with_noise(): one channel per qubit after
/// every gate layer. "noise" records inside a layer are explicit channels.
struct CircuitFile {
    Circuit circuit{0};
    std::optional<PauliNoiseParams> noise;

    bool operator==(const CircuitFile &) const = default;
};

/// Throws std::invalid_argument on malformed documents or invalid circuits.
CircuitFile parse_circuit_json(const std::string &text);
CircuitFile read_circuit_file(const std::string &path);

/// Gates are written as "diag" records with full phase vectors, noise
/// channels as "noise" records. Parsing the result gives back an equal
/// CircuitFile.
std::string serialize_circuit_json(const CircuitFile &file);

/// The circuit with `override_noise` (or else the file's noise) interspersed.
Circuit with_noise(const CircuitFile &file, const std::optional<PauliNoiseParams> &override_noise = std::nullopt);

/// "px,py,pz" -> params. Throws std::invalid_argument.
PauliNoiseParams parse_noise_triple(const std::string &text);

inline constexpr const char *kPercolationCsvHeader = "n,d,p,trial,max_component";

/// Header line then one row per entry, comma separated, LF line endings.
void write_percolation_csv(std::ostream &out, std::span<const PercolationRow> rows);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

/// {"n": ..., "probabilities": [...]}, index bit (n - 1 - q) is qubit q.
std::string distribution_json(const ExactDistribution &dist);

}  // namespace niqp

#endif  // NIQP_CIRCUIT_IO_H
