// Copyright 2026 The qreuse Authors
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


#include "qreuse/generators.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "qreuse/random.hpp"
#include "qreuse/unitary.hpp"

namespace qreuse {

std::vector<uint32_t> Graph::degrees() const {
    std::vector<uint32_t> d(num_vertices, 0);
    for (auto [u, v] : edges) {
        d[u]++;
        d[v]++;
    }
    return d;
}

Graph make_graph(uint32_t num_vertices, std::vector<std::pair<uint32_t, uint32_t>> edges) {
    for (auto &[u, v] : edges) {
        if (u == v) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        }
        if (u >= num_vertices || v >= num_vertices) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") out of range");
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("duplicate edge");
    }
    Graph g;
    g.num_vertices = num_vertices;
    g.weights.assign(edges.size(), 1.0);
    g.edges = std::move(edges);
    return g;
}

Graph complete_graph(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < n; u++) {
        for (uint32_t v = u + 1; v < n; v++) {
            edges.emplace_back(u, v);
        }
    }
    return make_graph(n, std::move(edges));
}

Operation GateSource::make(std::vector<QubitId> qubits, uint64_t site) const {
    const size_t dim = size_t{1} << qubits.size();
    if (mode == Mode::SeededHaar) {
        return Operation::gate("haar", std::move(qubits), {}, haar_unitary(dim, stream_seed(seed, site)));
    }
    return Operation::gate("dft", std::move(qubits), {}, dft_matrix(dim));
}

namespace {

constexpr std::string_view kFamilyNames[] = {"brick1d", "brick2d", "mps", "ttn", "mera", "qcnn", "bv", "qaoa"};

// Accumulates gates and emits "prepare all; gates; measure chosen" circuits.
class Builder {
   public:
    Builder(uint32_t num_qubits, const GateSource &source) : num_qubits_(num_qubits), source_(source) {}

    void gate(std::vector<QubitId> qubits) { gates_.push_back(source_.make(std::move(qubits), gates_.size())); }

    Circuit finish(uint32_t measured) {
        Circuit c(num_qubits_, measured);
        for (QubitId q = 0; q < num_qubits_; q++) {
            c.prepare(q);
        }
        for (Operation &op : gates_) {
            c.ops.push_back(std::move(op));
        }
        for (QubitId q = 0; q < measured; q++) {
            c.measure(q, q);
        }
        return c;
    }

   private:
    uint32_t num_qubits_;
    const GateSource &source_;
    std::vector<Operation> gates_;
};

void require(bool ok, const std::string &message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

}  // namespace

std::string_view family_name(Family f) { return kFamilyNames[static_cast<size_t>(f)]; }

std::optional<Family> parse_family(std::string_view name) {
    for (size_t i = 0; i < std::size(kFamilyNames); i++) {
        if (kFamilyNames[i] == name) {
            return static_cast<Family>(i);
        }
    }
    return std::nullopt;
}

Circuit brickwork_1d(uint32_t N, uint32_t k, bool periodic, const GateSource &source) {
    require(N >= 4, "brickwork_1d needs N >= 4");
    require(!periodic || N % 2 == 0, "periodic brickwork_1d needs even N");
    Builder b(N, source);
    for (uint32_t layer = 0; layer < k; layer++) {
        for (uint32_t i = 0; 2 * i + 1 < N; i++) {
            b.gate({2 * i, 2 * i + 1});
        }
        for (uint32_t i = 0; 2 * i + 1 < N; i++) {
            uint32_t right = 2 * i + 2;
            if (right >= N) {
                if (!periodic) {
                    break;
                }
                right %= N;
            }
            b.gate({2 * i + 1, right});
        }
    }
    return b.finish(N);
}

Circuit brickwork_2d(uint32_t Nx, uint32_t Ny, uint32_t k, bool periodic, const GateSource &source) {
    require(Nx >= 4 && Ny >= 4, "brickwork_2d needs Nx, Ny >= 4");
    require(!periodic || (Nx % 2 == 0 && Ny % 2 == 0), "periodic brickwork_2d needs even Nx and Ny");
    auto id = [Nx](uint32_t x, uint32_t y) { return x + Nx * y; };
    // Pairs (start, start+1) along one axis of length n for a given parity.
    auto row = [periodic](uint32_t n, uint32_t parity) {
        std::vector<std::pair<uint32_t, uint32_t>> pairs;
        for (uint32_t a = parity; a + 1 < n || (periodic && a < n); a += 2) {
            pairs.emplace_back(a, (a + 1) % n);
        }
        return pairs;
    };
    Builder b(Nx * Ny, source);
    for (uint32_t layer = 0; layer < k; layer++) {
        for (uint32_t parity = 0; parity < 2; parity++) {
            for (uint32_t y = 0; y < Ny; y++) {
                for (auto [x0, x1] : row(Nx, parity)) {
                    b.gate({id(x0, y), id(x1, y)});
                }
            }
        }
        for (uint32_t parity = 0; parity < 2; parity++) {
            for (uint32_t x = 0; x < Nx; x++) {
                for (auto [y0, y1] : row(Ny, parity)) {
                    b.gate({id(x, y0), id(x, y1)});
                }
            }
        }
    }
    return b.finish(Nx * Ny);
}

Circuit mps_prep(uint32_t N, uint32_t chi, const GateSource &source) {
    require(N >= 1, "mps_prep needs N >= 1");
    require(chi >= 2 && std::has_single_bit(chi), "mps_prep needs chi to be a power of two >= 2");
    const uint32_t nb = static_cast<uint32_t>(std::countr_zero(chi));
    Builder b(N + nb, source);
    for (uint32_t i = 0; i < N; i++) {
        std::vector<QubitId> support{i};
        for (uint32_t j = 0; j < nb; j++) {
            support.push_back(N + j);
        }
        b.gate(std::move(support));
    }
    return b.finish(N);
}

Circuit ttn(uint32_t D, const GateSource &source) {
    require(D >= 1 && D <= 20, "ttn needs 1 <= D <= 20");
    const uint32_t n = uint32_t{1} << D;
    Builder b(n, source);
    // Each node owns the range [lo, lo + size) and its wire lo; it hands the
    // upper half to a fresh wire. Nodes are emitted level by level.
    std::vector<uint32_t> level{0};
    for (uint32_t size = n; size >= 2; size /= 2) {
        std::vector<uint32_t> next;
        for (uint32_t lo : level) {
            b.gate({lo, lo + size / 2});
            next.push_back(lo);
            next.push_back(lo + size / 2);
        }
        level = std::move(next);
    }
    return b.finish(n);
}

Circuit mera(uint32_t D, const GateSource &source) {
    require(D >= 2 && D <= 20, "mera needs 2 <= D <= 20");
    // Build on abstract wires in creation order, then renumber so that qubit
    // ids follow the final left-to-right position.
    std::vector<uint32_t> wires{0};
    std::vector<std::pair<uint32_t, uint32_t>> gates;
    uint32_t created = 1;
    for (uint32_t scale = 0; scale < D; scale++) {
        std::vector<uint32_t> next;
        for (uint32_t w : wires) {
            uint32_t fresh = created++;
            gates.emplace_back(w, fresh);
            next.push_back(w);
            next.push_back(fresh);
        }
        wires = std::move(next);
        for (size_t i = 1; i + 1 < wires.size(); i += 2) {
            gates.emplace_back(wires[i], wires[i + 1]);
        }
    }
    std::vector<QubitId> position(created);
    for (size_t i = 0; i < wires.size(); i++) {
        position[wires[i]] = static_cast<QubitId>(i);
    }
    Builder b(created, source);
    for (auto [u, v] : gates) {
        b.gate({position[u], position[v]});
    }
    return b.finish(created);
}

Circuit qcnn(uint32_t D, const GateSource &source) { return dual(mera(D, source)); }

Circuit bernstein_vazirani(uint32_t N, std::string_view s) {
    require(N >= 1, "bernstein_vazirani needs N >= 1");
    require(s.size() == N, "hidden string length " + std::to_string(s.size()) + " != N = " + std::to_string(N));
    require(s.find_first_not_of("01") == std::string_view::npos, "hidden string must be binary");
    Circuit c(N + 1, N);
    for (QubitId q = 0; q <= N; q++) {
        c.prepare(q);
    }
    for (QubitId q = 0; q < N; q++) {
        c.gate("h", {q});
    }
    c.gate("x", {N});
    c.gate("h", {N});
    for (QubitId q = 0; q < N; q++) {
        if (s[q] == '1') {
            c.gate("cx", {q, N});
        }
    }
    for (QubitId q = 0; q < N; q++) {
        c.gate("h", {q});
    }
    for (QubitId q = 0; q < N; q++) {
        c.measure(q, q);
    }
    return c;
}

Graph random_u3r_graph(uint32_t N, uint64_t seed) {
    require(N >= 4 && N % 2 == 0, "random_u3r_graph needs even N >= 4");
    SplitMix64 rng(seed);
    std::vector<uint32_t> stubs(3 * N);
    for (int attempt = 0; attempt < 100000; attempt++) {
        for (uint32_t i = 0; i < stubs.size(); i++) {
            stubs[i] = i / 3;
        }
        for (size_t i = stubs.size() - 1; i > 0; i--) {
            std::swap(stubs[i], stubs[rng.below(i + 1)]);
        }
        std::set<std::pair<uint32_t, uint32_t>> seen;
        bool ok = true;
        for (size_t i = 0; ok && i < stubs.size(); i += 2) {
            auto [u, v] = std::minmax(stubs[i], stubs[i + 1]);
            ok = u != v && seen.emplace(u, v).second;
        }
        if (ok) {
            return make_graph(N, {seen.begin(), seen.end()});
        }
    }
    throw std::runtime_error("random_u3r_graph: no simple pairing found");
}

Circuit qaoa_maxcut(const Graph &graph, const std::vector<double> &betas, const std::vector<double> &gammas) {
    require(!betas.empty() && betas.size() == gammas.size(), "qaoa needs equal, nonzero numbers of betas and gammas");
    const uint32_t n = graph.num_vertices;
    Circuit c(n, n);
    for (QubitId q = 0; q < n; q++) {
        c.prepare(q);
    }
    for (QubitId q = 0; q < n; q++) {
        c.gate("h", {q});
    }
    for (size_t r = 0; r < betas.size(); r++) {
        for (auto [u, v] : graph.edges) {
            c.gate("rzz", {u, v}, {2 * gammas[r]});
        }
        for (QubitId q = 0; q < n; q++) {
            c.gate("rx", {q}, {2 * betas[r]});
        }
    }
    for (QubitId q = 0; q < n; q++) {
        c.measure(q, q);
    }
    return c;
}

Circuit random_circuit(uint32_t N, uint32_t num_gates, uint64_t seed) {
    require(N >= 2 || num_gates == 0, "random_circuit needs N >= 2 to place gates");
    SplitMix64 rng(seed);
    std::vector<std::pair<QubitId, QubitId>> pairs;
    std::vector<int64_t> first(N, -1), last(N, -1);
    for (uint32_t g = 0; g < num_gates; g++) {
        QubitId a = static_cast<QubitId>(rng.below(N));
        QubitId b = static_cast<QubitId>(rng.below(N - 1));
        if (b >= a) {
            b++;
        }
        pairs.emplace_back(a, b);
        for (QubitId q : {a, b}) {
            if (first[q] < 0) {
                first[q] = g;
            }
            last[q] = g;
        }
    }
    Circuit c(N, N);
    for (QubitId q = 0; q < N; q++) {
        if (first[q] < 0) {
            c.prepare(q).measure(q, q);
        }
    }
    for (uint32_t g = 0; g < num_gates; g++) {
        auto [a, b] = pairs[g];
        for (QubitId q : {a, b}) {
            if (first[q] == g) {
                c.prepare(q);
            }
        }
        c.gate("haar", {a, b}, {}, haar_unitary(4, stream_seed(seed, g)));
        for (QubitId q : {a, b}) {
            if (last[q] == g) {
                c.measure(q, q);
            }
        }
    }
    return c;
}

Circuit generate(const FamilyParams &p) {
    switch (p.family) {
        case Family::Brick1d:
            return brickwork_1d(p.N, p.k, p.periodic, p.gate_source);
        case Family::Brick2d:
            return brickwork_2d(p.Nx, p.Ny, p.k, p.periodic, p.gate_source);
        case Family::Mps:
            return mps_prep(p.N, p.chi, p.gate_source);
        case Family::Ttn:
            return ttn(p.D, p.gate_source);
        case Family::Mera:
            return mera(p.D, p.gate_source);
        case Family::Qcnn:
            return qcnn(p.D, p.gate_source);
        case Family::Bv:
            return bernstein_vazirani(p.N, p.s);
        case Family::Qaoa: {
            std::vector<double> betas = p.betas, gammas = p.gammas;
            if (betas.empty() && gammas.empty()) {
                betas.assign(p.p, kDefaultBeta);
                gammas.assign(p.p, kDefaultGamma);
            }
            return qaoa_maxcut(random_u3r_graph(p.N, p.seed), betas, gammas);
        }
    }
    throw std::invalid_argument("unknown family");
}

size_t predicted_width(const FamilyParams &p) {
    switch (p.family) {
        case Family::Brick1d:
            return std::min<size_t>(4 * size_t{p.k}, p.N);
        case Family::Brick2d: {
            const size_t lo = std::min(p.Nx, p.Ny), hi = std::max(p.Nx, p.Ny), k4 = 4 * size_t{p.k};
            if (k4 < lo) {
                return (k4 - 2) * lo + 2 * k4;
            }
            if (k4 > hi) {
                return size_t{p.Nx} * p.Ny;
            }
            return k4 * lo;
        }
        case Family::Mps:
            require(p.chi >= 2 && std::has_single_bit(p.chi), "chi must be a power of two >= 2");
            return 1 + static_cast<size_t>(std::countr_zero(p.chi));
        case Family::Ttn:
            return size_t{p.D} + 1;
        case Family::Mera:
        case Family::Qcnn:
            return 2 * size_t{p.D} - 1;
        case Family::Bv:
            return 2;
        case Family::Qaoa:
            break;
    }
    throw std::invalid_argument("qaoa has no closed-form compiled width");
}

}  // namespace qreuse
