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


#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "qreuse/circuit.hpp"
#include "qreuse/generators.hpp"
#include "qreuse/random.hpp"
#include "qreuse/simulator.hpp"
#include "qreuse/unitary.hpp"

namespace qreuse::testing {

// Prep x3; G1(0,1); G2(1,2); Measure x3.
inline Circuit chain3(uint64_t seed = 1) {
    Circuit c(3, 3);
    c.prepare(0).prepare(1).prepare(2);
    c.gate("g1", {0, 1}, {}, haar_unitary(4, stream_seed(seed, 0)));
    c.gate("g2", {1, 2}, {}, haar_unitary(4, stream_seed(seed, 1)));
    c.measure(0, 0).measure(1, 1).measure(2, 2);
    return c;
}

inline Circuit bell() {
    Circuit c(2, 2);
    c.prepare(0).prepare(1).gate("h", {0}).gate("cx", {0, 1}).measure(0, 0).measure(1, 1);
    return c;
}

// Five qubits with staggered preparations and measurements. Plain greedy
// needs four wires on this circuit but only three on its dual.
inline Circuit staggered5(uint64_t seed = 5) {
    Circuit c(5, 5);
    auto g = [&](QubitId a, QubitId b) {
        c.gate("u", {a, b}, {}, haar_unitary(4, stream_seed(seed, c.ops.size())));
    };
    c.prepare(3).prepare(1);
    g(3, 1);
    c.prepare(4).prepare(0);
    g(4, 0);
    c.measure(4, 4).prepare(2);
    g(3, 2);
    c.measure(2, 2);
    g(1, 3);
    c.measure(1, 1);
    g(0, 3);
    c.measure(0, 0).measure(3, 3);
    return c;
}

// N in [3, 8], 2..16 Haar gates, drawn from `seed`.
inline Circuit random_small(uint64_t seed, uint32_t max_n = 8) {
    SplitMix64 rng(stream_seed(seed, 0xC0FFEE));
    uint32_t n = 3 + static_cast<uint32_t>(rng.below(max_n - 2));
    uint32_t gates = 2 + static_cast<uint32_t>(rng.below(15));
    return random_circuit(n, gates, seed);
}

// Reference distribution for a measurement-terminated circuit: evolve the
// whole register with dense per-gate operators and read Born probabilities
// off the final state. Independent of the branching simulator.
inline std::map<std::string, double> brute_distribution(const Circuit &c) {
    const size_t dim = size_t{1} << c.num_qubits;
    std::vector<std::complex<double>> psi(dim, 0.0);
    psi[0] = 1.0;
    for (const Operation &op : c.ops) {
        if (op.kind != OpKind::Gate) {
            continue;
        }
        Matrix m = *op.resolved_matrix();
        const size_t k = op.qubits.size();
        std::vector<std::complex<double>> next(dim, 0.0);
        for (size_t i = 0; i < dim; i++) {
            if (psi[i] == 0.0) {
                continue;
            }
            size_t col = 0;
            for (size_t j = 0; j < k; j++) {
                col = (col << 1) | ((i >> op.qubits[j]) & 1);
            }
            for (size_t row = 0; row < (size_t{1} << k); row++) {
                size_t target = i;
                for (size_t j = 0; j < k; j++) {
                    size_t bit = (row >> (k - 1 - j)) & 1;
                    target = (target & ~(size_t{1} << op.qubits[j])) | (bit << op.qubits[j]);
                }
                next[target] += m(row, col) * psi[i];
            }
        }
        psi.swap(next);
    }
    std::map<QubitId, ClbitId> clbit_of;
    for (const Operation &op : c.ops) {
        if (op.kind == OpKind::Measure) {
            clbit_of[op.qubit()] = *op.clbit;
        }
    }
    std::map<std::string, double> out;
    for (size_t i = 0; i < dim; i++) {
        double p = std::norm(psi[i]);
        if (p < 1e-16) {
            continue;
        }
        std::string bits(c.num_clbits, '0');
        for (auto [q, cb] : clbit_of) {
            bits[cb] = ((i >> q) & 1) ? '1' : '0';
        }
        out[bits] += p;
    }
    return out;
}

inline double brute_tvd(const std::map<std::string, double> &a, const std::map<std::string, double> &b) {
    std::map<std::string, double> diff = a;
    for (const auto &[k, v] : b) {
        diff[k] -= v;
    }
    double s = 0;
    for (const auto &[k, v] : diff) {
        s += std::abs(v);
    }
    return s / 2;
}

}  // namespace qreuse::testing
