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

#include "niqp/circuit_io.h"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace niqp {

namespace {

using nlohmann::json;

PauliNoiseParams noise_from_json(const json &j) {
    PauliNoiseParams p{j.value("px", 0.0), j.value("py", 0.0), j.value("pz", 0.0)};
    p.validate();
    return p;
}

json noise_to_json(const PauliNoiseParams &p) {
    return json{{"px", p.px}, {"py", p.py}, {"pz", p.pz}};
}

Channel channel_from_json(const json &rec, size_t max_locality) {
    if (!rec.is_object() || !rec.contains("gate") || !rec.contains("qubits")) {
        throw std::invalid_argument("Gate record needs 'gate' and 'qubits'.");
    }
    const std::string name = rec.at("gate").get<std::string>();
    auto qubits = rec.at("qubits").get<std::vector<Qubit>>();
    if (name == "noise") {
        if (qubits.size() != 1) {
            throw std::invalid_argument("A noise record acts on exactly one qubit.");
        }
        return NoiseChannel{qubits[0], noise_from_json(rec)};
    }
    GateSpec spec{name, std::move(qubits), std::nullopt, {}};
    if (rec.contains("theta")) {
        spec.theta = rec.at("theta").get<double>();
    }
    if (rec.contains("phases")) {
        spec.phases = rec.at("phases").get<std::vector<double>>();
    }
    return make_gate(spec, max_locality);
}

}  // namespace

CircuitFile parse_circuit_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("Circuit file is not valid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("n")) {
            throw std::invalid_argument("Circuit file needs an integer field 'n'.");
        }
        const auto n = doc.at("n").get<size_t>();
        const auto max_locality = doc.value("max_locality", kDefaultMaxLocality);
        CircuitFile file{Circuit(n, max_locality), std::nullopt};
        if (doc.contains("noise") && !doc.at("noise").is_null()) {
            file.noise = noise_from_json(doc.at("noise"));
        }
        if (doc.contains("layers")) {
            for (const auto &layer_json : doc.at("layers")) {
                Layer layer;
                for (const auto &rec : layer_json) {
                    layer.push_back(channel_from_json(rec, max_locality));
                }
                file.circuit.append_layer(std::move(layer));
            }
        }
        return file;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("Malformed circuit file: ") + e.what());
    }
}

CircuitFile read_circuit_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("Cannot open circuit file '" + path + "'.");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_circuit_json(buffer.str());
}

std::string serialize_circuit_json(const CircuitFile &file) {
    json doc;
    doc["n"] = file.circuit.num_qubits();
    if (file.circuit.max_locality() != kDefaultMaxLocality) {
        doc["max_locality"] = file.circuit.max_locality();
    }
    if (file.noise) {
        doc["noise"] = noise_to_json(*file.noise);
    }
    json layers = json::array();
    for (const auto &layer : file.circuit.layers()) {
        json records = json::array();
        for (const auto &ch : layer) {
            if (const auto *g = std::get_if<DiagonalGate>(&ch)) {
                records.push_back({{"gate", "diag"}, {"qubits", g->support()}, {"phases", g->phases()}});
            } else {
                const auto &nc = std::get<NoiseChannel>(ch);
                json rec = noise_to_json(nc.params);
                rec["gate"] = "noise";
                rec["qubits"] = {nc.qubit};
                records.push_back(std::move(rec));
            }
        }
        layers.push_back(std::move(records));
    }
    doc["layers"] = std::move(layers);
    return doc.dump(2) + "\n";
}

Circuit with_noise(const CircuitFile &file, const std::optional<PauliNoiseParams> &override_noise) {
    const auto &noise = override_noise ? override_noise : file.noise;
    if (!noise || noise->is_identity()) {
        return file.circuit;
    }
    return intersperse_noise(file.circuit, *noise);
}

PauliNoiseParams parse_noise_triple(const std::string &text) {
    double v[3];
    size_t start = 0;
    for (int i = 0; i < 3; i++) {
        size_t end = text.find(',', start);
        if ((i < 2) != (end != std::string::npos)) {
            throw std::invalid_argument("Noise must be given as px,py,pz.");
        }
        std::string field = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        const char *first = field.data();
        const char *last = field.data() + field.size();
        auto [ptr, ec] = std::from_chars(first, last, v[i]);
        if (ec != std::errc() || ptr != last || field.empty()) {
            throw std::invalid_argument("Cannot parse noise component '" + field + "'.");
        }
        start = end + 1;
    }
    PauliNoiseParams p{v[0], v[1], v[2]};
    p.validate();
    return p;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw std::runtime_error("Failed to format a double.");
    }
    return std::string(buf, ptr);
}

void write_percolation_csv(std::ostream &out, std::span<const PercolationRow> rows) {
    out << kPercolationCsvHeader << '\n';
    for (const auto &row : rows) {
        out << row.n << ',' << row.d << ',' << format_double(row.p) << ',' << row.trial << ',' << row.max_component
            << '\n';
    }
}

std::string distribution_json(const ExactDistribution &dist) {
    json doc{{"n", dist.num_qubits}, {"probabilities", dist.probs}};
    return doc.dump() + "\n";
}

}  // namespace niqp
