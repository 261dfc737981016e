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

#include "qreuse/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "qreuse/errors.hpp"
#include "qreuse/graph.hpp"

namespace qreuse {

double Distribution::total() const {
    double s = 0;
    for (const auto &[bits, p] : probs) {
        s += p;
    }
    return s;
}

double Distribution::at(const std::string &bits) const {
    auto it = probs.find(bits);
    return it == probs.end() ? 0.0 : it->second;
}

namespace {

using State = std::vector<Complex>;

struct PreparedGate {
    std::vector<uint64_t> offsets;  // amplitude offset for each local basis index
    uint64_t mask = 0;              // union of target bits
    Matrix matrix;
};

class BranchingSimulator {
   public:
    BranchingSimulator(const Circuit &circuit, const SimOptions &options)
        : circuit_(circuit), options_(options), gates_(circuit.ops.size()) {
        for (size_t k = 0; k < circuit.ops.size(); k++) {
            const Operation &op = circuit.ops[k];
            if (!op.is_gate()) {
                continue;
            }
            if (op.qubits.size() > options.max_arity) {
                throw OracleLimitExceeded("gate arity " + std::to_string(op.qubits.size()) + " at op " +
                                          std::to_string(k) + " exceeds the simulation limit of " +
                                          std::to_string(options.max_arity));
            }
            auto m = op.resolved_matrix();
            if (!m) {
                throw UnsupportedInput("gate '" + op.label + "' at op " + std::to_string(k) +
                                       " has no matrix and is not a standard gate");
            }
            PreparedGate &g = gates_[k];
            const size_t arity = op.qubits.size();
            g.matrix = std::move(*m);
            g.offsets.assign(size_t{1} << arity, 0);
            for (size_t l = 0; l < g.offsets.size(); l++) {
                for (size_t j = 0; j < arity; j++) {
                    if ((l >> (arity - 1 - j)) & 1) {
                        g.offsets[l] |= uint64_t{1} << op.qubits[j];
                    }
                }
            }
            for (QubitId q : op.qubits) {
                g.mask |= uint64_t{1} << q;
            }
        }
    }

    Distribution run() {
        Distribution d;
        d.num_clbits = circuit_.num_clbits;
        out_ = &d;
        bits_.assign(circuit_.num_clbits, '0');
        State state(size_t{1} << circuit_.num_qubits);
        state[0] = 1;
        walk(0, std::move(state), 1.0);
        return d;
    }

   private:
    void apply_gate(State &state, const PreparedGate &g) const {
        const size_t dim = g.offsets.size();
        std::vector<Complex> in(dim), out(dim);
        for (uint64_t base = 0; base < state.size(); base++) {
            if (base & g.mask) {
                continue;
            }
            for (size_t l = 0; l < dim; l++) {
                in[l] = state[base | g.offsets[l]];
            }
            for (size_t r = 0; r < dim; r++) {
                Complex acc = 0;
                for (size_t c = 0; c < dim; c++) {
                    acc += g.matrix(r, c) * in[c];
                }
                out[r] = acc;
            }
            for (size_t l = 0; l < dim; l++) {
                state[base | g.offsets[l]] = out[l];
            }
        }
    }

    static double prob_one(const State &state, QubitId q) {
        const uint64_t bit = uint64_t{1} << q;
        double p = 0;
        for (uint64_t i = 0; i < state.size(); i++) {
            if (i & bit) {
                p += std::norm(state[i]);
            }
        }
        return p;
    }

    // Projects onto `outcome` for qubit q and renormalizes. When `to_zero`,
    // the surviving amplitudes are moved to the |0> half.
    static void project(State &state, QubitId q, int outcome, double prob, bool to_zero) {
        const uint64_t bit = uint64_t{1} << q;
        const double scale = 1.0 / std::sqrt(prob);
        for (uint64_t i = 0; i < state.size(); i++) {
            if (i & bit) {
                continue;
            }
            Complex zero = state[i], one = state[i | bit];
            if (outcome == 0) {
                state[i] = zero * scale;
                state[i | bit] = 0;
            } else if (to_zero) {
                state[i] = one * scale;
                state[i | bit] = 0;
            } else {
                state[i] = 0;
                state[i | bit] = one * scale;
            }
        }
    }

    void walk(size_t k, State state, double weight) {
        for (; k < circuit_.ops.size(); k++) {
            const Operation &op = circuit_.ops[k];
            if (op.is_gate()) {
                apply_gate(state, gates_[k]);
                continue;
            }
            const QubitId q = op.qubit();
            const bool record = op.kind == OpKind::Measure;
            double p1 = prob_one(state, q);
            double p0 = std::max(0.0, 1.0 - p1);
            p1 = std::min(1.0, p1);
            const bool keep0 = p0 >= options_.prune;
            const bool keep1 = p1 >= options_.prune;
            if (keep0 && keep1) {
                State other = state;
                project(other, q, 0, p0, !record);
                if (record) {
                    bits_[*op.clbit] = '0';
                }
                walk(k + 1, std::move(other), weight * p0);
                project(state, q, 1, p1, !record);
                if (record) {
                    bits_[*op.clbit] = '1';
                }
                walk(k + 1, std::move(state), weight * p1);
                return;
            }
            const int outcome = keep1 ? 1 : 0;
            project(state, q, outcome, outcome ? p1 : p0, !record);
            if (record) {
                bits_[*op.clbit] = outcome ? '1' : '0';
            }
        }
        out_->probs[bits_] += weight;
    }

    const Circuit &circuit_;
    SimOptions options_;
    std::vector<PreparedGate> gates_;
    Distribution *out_ = nullptr;
    std::string bits_;
};

}  // namespace

Distribution exact_distribution(const Circuit &circuit, const SimOptions &options) {
    require_valid(circuit);
    if (circuit.num_qubits > options.max_qubits) {
        throw OracleLimitExceeded("circuit width " + std::to_string(circuit.num_qubits) +
                                  " exceeds the simulation limit of " + std::to_string(options.max_qubits));
    }
    return BranchingSimulator(circuit, options).run();
}

double tvd(const Distribution &a, const Distribution &b) {
    if (a.num_clbits != b.num_clbits) {
        throw std::invalid_argument("distributions have different clbit counts");
    }
    double s = 0;
    auto ia = a.probs.begin();
    auto ib = b.probs.begin();
    while (ia != a.probs.end() || ib != b.probs.end()) {
        if (ib == b.probs.end() || (ia != a.probs.end() && ia->first < ib->first)) {
            s += std::abs(ia->second);
            ++ia;
        } else if (ia == a.probs.end() || ib->first < ia->first) {
            s += std::abs(ib->second);
            ++ib;
        } else {
            s += std::abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return s / 2;
}

Distribution permute_bits(const Distribution &d, const std::vector<ClbitId> &permutation) {
    if (permutation.size() != d.num_clbits) {
        throw std::invalid_argument("permutation size does not match clbit count");
    }
    Distribution out;
    out.num_clbits = d.num_clbits;
    for (const auto &[bits, p] : d.probs) {
        std::string moved(bits.size(), '0');
        for (size_t i = 0; i < bits.size(); i++) {
            moved[permutation[i]] = bits[i];
        }
        out.probs[moved] += p;
    }
    return out;
}

EquivalenceReport verify_equivalence(const Circuit &original, const Circuit &compiled,
                                     const std::map<QubitId, ClbitId> &clbit_map, double tol,
                                     const SimOptions &options) {
    if (compiled.num_clbits != original.num_clbits || clbit_map.size() != original.num_clbits) {
        throw std::invalid_argument("compiled circuit clbits do not cover the original outputs");
    }
    std::map<QubitId, ClbitId> original_clbit;
    for (const Operation &op : original.ops) {
        if (op.kind == OpKind::Measure) {
            original_clbit[op.qubit()] = *op.clbit;
        }
    }
    std::vector<ClbitId> permutation(compiled.num_clbits, 0);
    std::vector<bool> hit(compiled.num_clbits, false);
    for (const auto &[q, c] : clbit_map) {
        auto it = original_clbit.find(q);
        if (it == original_clbit.end() || c >= compiled.num_clbits || hit[c]) {
            throw std::invalid_argument("clbit map is not a bijection onto the original outputs");
        }
        permutation[c] = it->second;
        hit[c] = true;
    }

    Distribution expected = exact_distribution(original, options);
    Distribution actual = permute_bits(exact_distribution(compiled, options), permutation);
    EquivalenceReport report;
    report.tvd = tvd(expected, actual);
    report.pass = report.tvd < tol;
    report.original_support = expected.probs.size();
    report.compiled_support = actual.probs.size();
    return report;
}

EquivalenceReport verify_equivalence(const Circuit &original, const CompiledCircuit &compiled, double tol,
                                     const SimOptions &options) {
    return verify_equivalence(original, compiled.circuit, compiled.clbit_map, tol, options);
}

double cut_value(const Graph &graph, const std::string &bits) {
    if (bits.size() != graph.num_vertices) {
        throw std::invalid_argument("bitstring length " + std::to_string(bits.size()) + " != vertex count " +
                                    std::to_string(graph.num_vertices));
    }
    double cut = 0;
    for (size_t e = 0; e < graph.edges.size(); e++) {
        auto [u, v] = graph.edges[e];
        if (bits[u] != bits[v]) {
            cut += graph.weights[e];
        }
    }
    return cut;
}

double expected_cut(const Distribution &distribution, const Graph &graph) {
    if (distribution.num_clbits != graph.num_vertices) {
        throw std::invalid_argument("distribution and graph sizes differ");
    }
    double s = 0;
    for (const auto &[bits, p] : distribution.probs) {
        s += p * cut_value(graph, bits);
    }
    return s;
}

}  // namespace qreuse
