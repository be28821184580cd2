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

#ifndef NIQP_PERCOLATION_H
#define NIQP_PERCOLATION_H

#include <cstdint>
#include <span>
#include <vector>

#include "niqp/circuit.h"
#include "niqp/reduction.h"
#include "niqp/rng.h"

namespace niqp {

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
   public:
    explicit UnionFind(size_t n);
    uint32_t find(uint32_t x);
    /// Returns the new root.
    uint32_t unite(uint32_t a, uint32_t b);
    size_t size_of(uint32_t x) {
        return size_[find(x)];
    }

   private:
    std::vector<uint32_t> parent_;
    std::vector<uint32_t> size_;
};

/// Partition of [0, n) into connected components. Each component is sorted;
/// components are ordered by their smallest vertex.
struct ComponentPartition {
    std::vector<std::vector<Qubit>> components;
    size_t max_size = 0;

    /// component_of[v] indexes into `components`.
    std::vector<uint32_t> component_of;
};

/// Components of the graph whose edges are the multi-qubit gates in `rc`.
/// Classical qubits carry no gates and end up as singletons.
ComponentPartition components(const ReducedCircuit &rc);

ComponentPartition connected_components(const InteractionGraph &g);

/// Vertex percolation: each vertex survives with probability q; a removed
/// vertex loses all its edges. Returns the components of what remains.
ComponentPartition percolate_graph(const InteractionGraph &g, double q, Rng &rng);

/// Largest component size after vertex percolation, without materializing
/// the partition.
size_t percolate_max_component(const InteractionGraph &g, double q, Rng &rng);

/// Uniform-ish random simple d-regular graph: configuration-model pairing of
/// stubs where a pair that would form a self-loop or multi-edge is redrawn;
/// the whole pairing restarts if it gets stuck. Requires n * degree even and
/// degree < n.
InteractionGraph random_regular_graph(size_t n, size_t degree, Rng &rng);

struct PercolationRow {
    size_t n;
    size_t d;
    double p;
    size_t trial;
    size_t max_component;
};

struct PercolationExperiment {
    double p = 0.05;
    std::vector<size_t> depths;
    std::vector<size_t> sizes;
    size_t trials = 10;
    uint64_t seed = 0;
    size_t threads = 1;
};

/// For each (n, d, trial): draws a random d-regular graph on n vertices and
/// percolates it with survival probability (1 - 2p)^d. If n * d is odd, n is
/// raised by one and the row reports the size actually used. Rows come back
/// ordered by (n, d, trial); trial t of cell (n, d) uses stream
/// derive_stream(seed, (i_n * |depths| + i_d) * trials + t).
std::vector<PercolationRow> run_percolation_experiment(const PercolationExperiment &config);

}  // namespace niqp

#endif  // NIQP_PERCOLATION_H
