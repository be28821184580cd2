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

#include "niqp/percolation.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace niqp {

UnionFind::UnionFind(size_t n) : parent_(n), size_(n, 1) {
    for (size_t i = 0; i < n; i++) {
        parent_[i] = static_cast<uint32_t>(i);
    }
}

uint32_t UnionFind::find(uint32_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

uint32_t UnionFind::unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
        return a;
    }
    if (size_[a] < size_[b]) {
        std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
}

namespace {

ComponentPartition partition_from(UnionFind &uf, size_t n) {
    ComponentPartition out;
    out.component_of.assign(n, UINT32_MAX);
    std::vector<uint32_t> root_to_index(n, UINT32_MAX);
    for (size_t v = 0; v < n; v++) {
        uint32_t r = uf.find(static_cast<uint32_t>(v));
        if (root_to_index[r] == UINT32_MAX) {
            root_to_index[r] = static_cast<uint32_t>(out.components.size());
            out.components.emplace_back();
        }
        uint32_t idx = root_to_index[r];
        out.components[idx].push_back(static_cast<Qubit>(v));
        out.component_of[v] = idx;
    }
    for (const auto &c : out.components) {
        out.max_size = std::max(out.max_size, c.size());
    }
    return out;
}

}  // namespace

ComponentPartition components(const ReducedCircuit &rc) {
    UnionFind uf(rc.num_qubits);
    for (const auto &ch : rc.channels) {
        if (const auto *g = std::get_if<DiagonalGate>(&ch)) {
            const auto &s = g->support();
            for (size_t i = 1; i < s.size(); i++) {
                uf.unite(s[0], s[i]);
            }
        }
    }
    return partition_from(uf, rc.num_qubits);
}

ComponentPartition connected_components(const InteractionGraph &g) {
    UnionFind uf(g.num_vertices());
    for (size_t v = 0; v < g.num_vertices(); v++) {
        for (Qubit w : g.neighbors(static_cast<Qubit>(v))) {
            uf.unite(static_cast<uint32_t>(v), w);
        }
    }
    return partition_from(uf, g.num_vertices());
}

namespace {

std::vector<bool> draw_survivors(size_t n, double q, Rng &rng) {
    std::vector<bool> kept(n);
    for (size_t v = 0; v < n; v++) {
        kept[v] = uniform01(rng) < q;
    }
    return kept;
}

void unite_kept_edges(const InteractionGraph &g, const std::vector<bool> &kept, UnionFind &uf) {
    for (size_t v = 0; v < g.num_vertices(); v++) {
        if (!kept[v]) {
            continue;
        }
        for (Qubit w : g.neighbors(static_cast<Qubit>(v))) {
            if (w > v && kept[w]) {
                uf.unite(static_cast<uint32_t>(v), w);
            }
        }
    }
}

}  // namespace

ComponentPartition percolate_graph(const InteractionGraph &g, double q, Rng &rng) {
    if (!(q >= 0 && q <= 1)) {
        throw std::invalid_argument("Survival probability must lie in [0, 1].");
    }
    std::vector<bool> kept = draw_survivors(g.num_vertices(), q, rng);
    UnionFind uf(g.num_vertices());
    unite_kept_edges(g, kept, uf);
    return partition_from(uf, g.num_vertices());
}

size_t percolate_max_component(const InteractionGraph &g, double q, Rng &rng) {
    if (!(q >= 0 && q <= 1)) {
        throw std::invalid_argument("Survival probability must lie in [0, 1].");
    }
    const size_t n = g.num_vertices();
    std::vector<bool> kept = draw_survivors(n, q, rng);
    UnionFind uf(n);
    unite_kept_edges(g, kept, uf);
    size_t best = n > 0 ? 1 : 0;
    for (size_t v = 0; v < n; v++) {
        if (kept[v]) {
            best = std::max(best, uf.size_of(static_cast<uint32_t>(v)));
        }
    }
    return best;
}

InteractionGraph random_regular_graph(size_t n, size_t degree, Rng &rng) {
    if ((n * degree) % 2 != 0) {
        throw std::invalid_argument("A d-regular graph on n vertices needs n * d even.");
    }
    if (degree >= n && !(degree == 0)) {
        throw std::invalid_argument("A simple d-regular graph needs d < n.");
    }
    constexpr size_t kMaxFailures = 100;
    constexpr size_t kScanLimit = 2000;

    std::vector<Qubit> stubs;
    stubs.reserve(n * degree);
    for (int attempt = 0; attempt < 1000; attempt++) {
        InteractionGraph g(n);
        stubs.clear();
        for (size_t v = 0; v < n; v++) {
            for (size_t j = 0; j < degree; j++) {
                stubs.push_back(static_cast<Qubit>(v));
            }
        }
        auto remove_pair = [&](size_t i, size_t j) {
            if (i < j) {
                std::swap(i, j);
            }
            stubs[i] = stubs.back();
            stubs.pop_back();
            stubs[j] = stubs.back();
            stubs.pop_back();
        };

        size_t failures = 0;
        bool stuck = false;
        while (!stubs.empty()) {
            std::uniform_int_distribution<size_t> pick(0, stubs.size() - 1);
            size_t i = pick(rng);
            size_t j = pick(rng);
            if (i == j) {
                continue;
            }
            Qubit a = stubs[i];
            Qubit b = stubs[j];
            if (a != b && !g.has_edge(a, b)) {
                g.add_edge(a, b);
                remove_pair(i, j);
                failures = 0;
                continue;
            }
            if (++failures < kMaxFailures || stubs.size() > kScanLimit) {
                continue;
            }
            // Few stubs left and repeated rejections: check whether any
            // legal pair remains at all.
            std::vector<std::pair<size_t, size_t>> legal;
            for (size_t x = 0; x < stubs.size(); x++) {
                for (size_t y = x + 1; y < stubs.size(); y++) {
                    if (stubs[x] != stubs[y] && !g.has_edge(stubs[x], stubs[y])) {
                        legal.emplace_back(x, y);
                    }
                }
            }
            if (legal.empty()) {
                stuck = true;
                break;
            }
            auto [x, y] = legal[std::uniform_int_distribution<size_t>(0, legal.size() - 1)(rng)];
            g.add_edge(stubs[x], stubs[y]);
            remove_pair(x, y);
            failures = 0;
        }
        if (!stuck) {
            return g;
        }
    }
    throw std::runtime_error("random_regular_graph failed to complete a pairing.");
}

std::vector<PercolationRow> run_percolation_experiment(const PercolationExperiment &config) {
    const size_t num_cells = config.sizes.size() * config.depths.size();
    const size_t total = num_cells * config.trials;
    std::vector<PercolationRow> rows(total);

    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= total) {
                return;
            }
            size_t trial = idx % config.trials;
            size_t cell = idx / config.trials;
            size_t d = config.depths[cell % config.depths.size()];
            size_t n = config.sizes[cell / config.depths.size()];
            if ((n * d) % 2 != 0) {
                n++;
            }
            try {
                Rng rng = derive_stream(config.seed, idx);
                double q = std::pow(1.0 - 2.0 * config.p, static_cast<double>(d));
                InteractionGraph g = random_regular_graph(n, d, rng);
                rows[idx] = PercolationRow{n, d, config.p, trial, percolate_max_component(g, q, rng)};
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(total);
                return;
            }
        }
    };

    size_t threads = std::max<size_t>(1, config.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

}  // namespace niqp
