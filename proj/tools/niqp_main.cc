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

// niqp: sample noisy IQP circuits, evaluate thresholds, run percolation
// experiments, compute exact distributions and encode circuits.
//
// Exit codes: 0 success, 2 usage or input error, 3 resource cap exceeded,
// 4 configuration below the relevant threshold. NIQP_THREADS sets the worker
// count (default: hardware concurrency).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "niqp/circuit_io.h"
#include "niqp/encoding.h"
#include "niqp/errors.h"
#include "niqp/oracle.h"
#include "niqp/percolation.h"
#include "niqp/sampler.h"
#include "niqp/thresholds.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitThreshold = 4;

size_t thread_count() {
    if (const char *env = std::getenv("NIQP_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) {
                return static_cast<size_t>(v);
            }
        } catch (const std::exception &) {
        }
        throw std::invalid_argument("NIQP_THREADS must be a positive integer.");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("Cannot open '" + path + "' for writing.");
    }
    out << text;
}

// "a:b" or "a:b:step" (inclusive) or "a,b,c".
std::vector<size_t> parse_range(const std::string &text) {
    std::vector<size_t> out;
    auto to_size = [&](const std::string &s) {
        size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument("Bad range '" + text + "'.");
        }
        return static_cast<size_t>(v);
    };
    try {
        if (text.find(':') != std::string::npos) {
            std::vector<size_t> parts;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ':')) {
                parts.push_back(to_size(item));
            }
            if (parts.size() < 2 || parts.size() > 3 || (parts.size() == 3 && parts[2] == 0) || parts[0] > parts[1]) {
                throw std::invalid_argument("Bad range '" + text + "'.");
            }
            size_t step = parts.size() == 3 ? parts[2] : 1;
            for (size_t v = parts[0]; v <= parts[1]; v += step) {
                out.push_back(v);
            }
        } else {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                out.push_back(to_size(item));
            }
        }
    } catch (const std::logic_error &) {
        throw std::invalid_argument("Bad range '" + text + "'.");
    }
    if (out.empty()) {
        throw std::invalid_argument("Empty range '" + text + "'.");
    }
    return out;
}

struct SampleArgs {
    std::string circuit;
    size_t shots = 1;
    uint64_t seed = 0;
    std::string mode = "exact";
    std::optional<double> epsilon;
    std::optional<std::string> noise;
    size_t cap = niqp::kDefaultMaxSubsystemQubits;
    std::string out;
};

int cmd_sample(const SampleArgs &args) {
    using namespace niqp;
    const CircuitFile file = read_circuit_file(args.circuit);
    std::optional<PauliNoiseParams> override_noise;
    if (args.noise) {
        override_noise = parse_noise_triple(*args.noise);
    }
    const Circuit circuit = with_noise(file, override_noise);
    SamplingMode mode;
    if (args.mode == "exact") {
        mode = SamplingMode::kExact;
    } else if (args.mode == "montecarlo") {
        mode = SamplingMode::kMonteCarlo;
        if (!args.epsilon) {
            throw std::invalid_argument("--mode montecarlo requires --epsilon.");
        }
    } else {
        throw std::invalid_argument("--mode must be exact or montecarlo.");
    }

    NoisyIqpSampler sampler(circuit, SamplerOptions{args.cap});
    const double eps = args.epsilon.value_or(0.0);
    auto results = sampler.sample_batch(mode, args.shots, args.seed, eps, thread_count());

    std::string lines;
    lines.reserve(results.size() * (circuit.num_qubits() + 1));
    size_t fallbacks = 0;
    double work = 0;
    for (const auto &r : results) {
        for (uint8_t b : r.outcome) {
            lines.push_back(b ? '1' : '0');
        }
        lines.push_back('\n');
        fallbacks += r.fell_back_uniform ? 1 : 0;
        work += static_cast<double>(r.work_units);
    }
    write_text(args.out, lines);

    const size_t k = circuit.locality();
    const size_t d = circuit.gate_depth();
    const double p = circuit.min_noise_strength().value_or(0.0);
    json sidecar{
        {"mode", args.mode},
        {"seed", args.seed},
        {"shots", args.shots},
        {"n", circuit.num_qubits()},
        {"fallback_count", fallbacks},
        {"mean_work_units", args.shots ? work / static_cast<double>(args.shots) : 0.0},
        {"p", p},
        {"k", k},
        {"d", d},
        {"d_star", nullptr},
        {"d_c", nullptr},
    };
    if (args.epsilon) {
        sidecar["epsilon"] = *args.epsilon;
    }
    if (k >= 2 && p > 0 && p < 0.5) {
        sidecar["d_star"] = d_star(p, static_cast<int>(k));
        sidecar["d_c"] = d_c(p, static_cast<int>(k));
    }
    if (!args.out.empty() && args.out != "-") {
        write_text(args.out + ".json", sidecar.dump(2) + "\n");
    }
    return 0;
}

int cmd_threshold(double p, int k, std::optional<int> rounds, const std::string &out) {
    using namespace niqp;
    if (!(p > 0 && p < 0.5)) {
        throw std::invalid_argument("--p must lie in (0, 0.5).");
    }
    if (k < 2) {
        throw std::invalid_argument("--k must be at least 2.");
    }
    json doc{{"p", p}, {"k", k}, {"d_star", d_star(p, k)}, {"d_c", d_c(p, k)}};
    if (rounds) {
        if (*rounds < 1) {
            throw std::invalid_argument("--r must be at least 1.");
        }
        doc["r"] = *rounds;
        doc["qaoa_delta_star"] = qaoa_degree_threshold(p, *rounds);
    }
    auto hard = hardness_max_depth(p);
    doc["hardness_max_depth"] = hard ? json(*hard) : json(nullptr);
    write_text(out, doc.dump(2) + "\n");
    return 0;
}

int cmd_percolate(double p, const std::string &d_range, const std::string &n_range, size_t trials, uint64_t seed,
                  const std::string &out) {
    using namespace niqp;
    if (!(p >= 0 && p <= 0.5)) {
        throw std::invalid_argument("--p must lie in [0, 0.5].");
    }
    PercolationExperiment config;
    config.p = p;
    config.depths = parse_range(d_range);
    config.sizes = parse_range(n_range);
    config.trials = trials;
    config.seed = seed;
    config.threads = thread_count();
    auto rows = run_percolation_experiment(config);
    std::ostringstream csv;
    write_percolation_csv(csv, rows);
    write_text(out, csv.str());
    return 0;
}

int cmd_oracle(const std::string &path, const std::optional<std::string> &noise, const std::string &out) {
    using namespace niqp;
    const CircuitFile file = read_circuit_file(path);
    std::optional<PauliNoiseParams> override_noise;
    if (noise) {
        override_noise = parse_noise_triple(*noise);
    }
    write_text(out, distribution_json(exact_distribution(with_noise(file, override_noise))));
    return 0;
}

int cmd_encode(const std::string &path, size_t r, bool reduce, const std::string &out) {
    using namespace niqp;
    const CircuitFile file = read_circuit_file(path);
    CircuitFile encoded{encode_circuit(file.circuit, r), file.noise};
    if (reduce) {
        encoded.circuit = reduce_circuit_locality(encoded.circuit);
    }
    write_text(out, serialize_circuit_json(encoded));
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Classical sampling of noisy IQP circuits"};
    app.require_subcommand(1);

    SampleArgs sample;
    auto *sample_cmd = app.add_subcommand("sample", "Draw output bitstrings from a noisy circuit");
    sample_cmd->add_option("--circuit", sample.circuit, "Circuit file (JSON)")->required();
    sample_cmd->add_option("--shots", sample.shots, "Number of samples")->required();
    sample_cmd->add_option("--seed", sample.seed, "Master seed")->required();
    sample_cmd->add_option("--mode", sample.mode, "exact or montecarlo")->check(CLI::IsMember({"exact", "montecarlo"}));
    sample_cmd->add_option("--epsilon", sample.epsilon, "Monte Carlo error budget");
    sample_cmd->add_option("--noise", sample.noise, "px,py,pz after every gate layer (overrides the file)");
    sample_cmd->add_option("--cap", sample.cap, "Largest component simulated as a statevector");
    sample_cmd->add_option("--out", sample.out, "Output file; a .json sidecar is written next to it")->required();

    double th_p = 0;
    int th_k = 2;
    std::optional<int> th_r;
    std::string th_out;
    auto *threshold_cmd = app.add_subcommand("threshold", "Depth thresholds d_star and d_c");
    threshold_cmd->add_option("--p", th_p, "Noise strength")->required();
    threshold_cmd->add_option("--k", th_k, "Gate locality")->required();
    threshold_cmd->add_option("--r", th_r, "QAOA rounds (adds qaoa_delta_star)");
    threshold_cmd->add_option("--out", th_out, "Output file (default stdout)");

    double pc_p = 0.05;
    std::string pc_d, pc_n, pc_out;
    size_t pc_trials = 10;
    uint64_t pc_seed = 0;
    auto *percolate_cmd = app.add_subcommand("percolate", "Largest component of percolated random regular graphs");
    percolate_cmd->add_option("--p", pc_p, "Noise strength")->required();
    percolate_cmd->add_option("--d-range", pc_d, "Depths: a:b[:step] or a,b,c")->required();
    percolate_cmd->add_option("--n-range", pc_n, "Sizes: a:b[:step] or a,b,c")->required();
    percolate_cmd->add_option("--trials", pc_trials, "Trials per (n, d)");
    percolate_cmd->add_option("--seed", pc_seed, "Master seed");
    percolate_cmd->add_option("--out", pc_out, "CSV output (default stdout)");

    std::string or_circuit, or_out;
    std::optional<std::string> or_noise;
    auto *oracle_cmd = app.add_subcommand("oracle", "Exact output distribution by density-matrix simulation");
    oracle_cmd->add_option("--circuit", or_circuit, "Circuit file (JSON)")->required();
    oracle_cmd->add_option("--noise", or_noise, "px,py,pz after every gate layer (overrides the file)");
    oracle_cmd->add_option("--out", or_out, "Output file (default stdout)");

    std::string en_circuit, en_out;
    size_t en_r = 1;
    bool en_reduce = false;
    auto *encode_cmd = app.add_subcommand("encode", "Repetition-encode a Z-string circuit");
    encode_cmd->add_option("--circuit", en_circuit, "Circuit file (JSON)")->required();
    encode_cmd->add_option("--r", en_r, "Repetitions")->required();
    encode_cmd->add_flag("--reduce-locality", en_reduce, "Rewrite wide rotations as <= 3-local layers");
    encode_cmd->add_option("--out", en_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*sample_cmd) {
            return cmd_sample(sample);
        }
        if (*threshold_cmd) {
            return cmd_threshold(th_p, th_k, th_r, th_out);
        }
        if (*percolate_cmd) {
            return cmd_percolate(pc_p, pc_d, pc_n, pc_trials, pc_seed, pc_out);
        }
        if (*oracle_cmd) {
            return cmd_oracle(or_circuit, or_noise, or_out);
        }
        if (*encode_cmd) {
            return cmd_encode(en_circuit, en_r, en_reduce, en_out);
        }
    } catch (const niqp::ResourceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const niqp::ThresholdError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitThreshold;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
