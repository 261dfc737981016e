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

#include "qreuse/rewriter.hpp"

#include <deque>
#include <stdexcept>

#include "qreuse/errors.hpp"

namespace qreuse {

std::string AllocationPolicy::to_string() const {
    if (kind == Kind::ReuseFirst) {
        return "reuse-first";
    }
    return "new-first-until:" + std::to_string(budget);
}

std::optional<AllocationPolicy> AllocationPolicy::parse(std::string_view text) {
    if (text == "reuse-first") {
        return reuse_first();
    }
    constexpr std::string_view prefix = "new-first-until:";
    if (text.starts_with(prefix)) {
        try {
            size_t used = 0;
            std::string digits(text.substr(prefix.size()));
            unsigned long long b = std::stoull(digits, &used);
            if (used == digits.size()) {
                return new_first_until(b);
            }
        } catch (const std::exception &) {
        }
    }
    return std::nullopt;
}

namespace {

// Rebuilds lifetimes from binding/measure annotations.
std::vector<WireLifetime> collect_lifetimes(const Circuit &circuit,
                                            const std::vector<std::optional<QubitId>> &op_logical) {
    std::vector<WireLifetime> out;
    std::vector<std::optional<size_t>> open(circuit.num_qubits);
    std::vector<size_t> last_touch(circuit.num_qubits, 0);
    for (size_t k = 0; k < circuit.ops.size(); k++) {
        const Operation &op = circuit.ops[k];
        bool binds = (op.kind == OpKind::Prepare || op.kind == OpKind::Reset) && op_logical[k];
        if (binds) {
            uint32_t p = op.qubit();
            if (open[p]) {
                out[*open[p]].end_op = last_touch[p];
            }
            open[p] = out.size();
            out.push_back(WireLifetime{*op_logical[k], p, k, k, op.kind == OpKind::Reset});
        }
        for (QubitId p : op.qubits) {
            last_touch[p] = k;
        }
        if (op.kind == OpKind::Measure) {
            uint32_t p = op.qubit();
            if (open[p]) {
                out[*open[p]].end_op = k;
                open[p].reset();
            }
        }
    }
    for (uint32_t p = 0; p < circuit.num_qubits; p++) {
        if (open[p]) {
            out[*open[p]].end_op = last_touch[p];
        }
    }
    return out;
}

void add_trailing_resets(CompiledCircuit &compiled) {
    Circuit &c = compiled.circuit;
    std::vector<std::optional<OpKind>> last(c.num_qubits);
    for (const Operation &op : c.ops) {
        for (QubitId p : op.qubits) {
            last[p] = op.kind;
        }
    }
    for (uint32_t p = 0; p < c.num_qubits; p++) {
        if (last[p] == OpKind::Measure) {
            c.reset(p);
            compiled.op_logical.push_back(std::nullopt);
        }
    }
}

std::string join_order(const std::vector<QubitId> &order) {
    std::string s = "[";
    for (size_t i = 0; i < order.size(); i++) {
        s += (i ? "," : "") + std::to_string(order[i]);
    }
    return s + "]";
}

}  // namespace

CompiledCircuit rewrite(const Circuit &circuit, std::span<const QubitId> order, AllocationPolicy policy,
                        RewriteOptions options) {
    ConeMap cones = compute_cones(circuit);
    require_permutation(cones, order);
    if (policy.kind == AllocationPolicy::Kind::NewFirstUntil && options.strict_budget) {
        size_t needed = width_of_order(cones, order);
        if (policy.budget < needed) {
            throw std::invalid_argument("budget " + std::to_string(policy.budget) + " is below the order width " +
                                        std::to_string(needed));
        }
    }

    CompiledCircuit out;
    out.order.assign(order.begin(), order.end());
    out.policy = policy;
    out.circuit.num_clbits = circuit.num_clbits;
    out.circuit.metadata = circuit.metadata;

    std::vector<std::optional<uint32_t>> wire_of(circuit.num_qubits);
    std::deque<uint32_t> free_pool;
    uint32_t fresh = 0;
    std::vector<bool> emitted(circuit.ops.size(), false);

    auto emit = [&](Operation op, std::optional<QubitId> logical) {
        out.circuit.ops.push_back(std::move(op));
        out.op_logical.push_back(logical);
    };
    auto bind = [&](QubitId logical) {
        bool take_fresh;
        if (policy.kind == AllocationPolicy::Kind::ReuseFirst) {
            take_fresh = free_pool.empty();
        } else {
            take_fresh = fresh < policy.budget || free_pool.empty();
        }
        uint32_t p;
        if (take_fresh) {
            p = fresh++;
            emit(Operation::prepare(p), logical);
        } else {
            p = free_pool.front();
            free_pool.pop_front();
            emit(Operation::reset(p), logical);
        }
        wire_of[logical] = p;
    };

    for (QubitId q : order) {
        cones.gates[q].for_each([&](size_t k) {
            if (emitted[k]) {
                return;
            }
            emitted[k] = true;
            Operation op = circuit.ops[k];
            for (QubitId &r : op.qubits) {
                if (!wire_of[r]) {
                    bind(r);
                }
                r = *wire_of[r];
            }
            emit(std::move(op), std::nullopt);
        });
        if (!wire_of[q]) {
            bind(q);
        }
        uint32_t p = *wire_of[q];
        if (cones.clbit[q]) {
            emit(Operation::measure(p, *cones.clbit[q]), q);
            out.clbit_map[q] = *cones.clbit[q];
        }
        free_pool.push_back(p);
    }

    out.circuit.num_qubits = fresh;
    out.physical_width = fresh;
    if (options.trailing_resets) {
        add_trailing_resets(out);
    }
    out.lifetimes = collect_lifetimes(out.circuit, out.op_logical);
    annotate_metadata(out);
    return out;
}

CompiledCircuit rewrite_via_dual(const Circuit &circuit, std::span<const QubitId> dual_order,
                                 AllocationPolicy policy, RewriteOptions options) {
    ConeMap cones = compute_cones(circuit, {.with_gates = false});
    Circuit dual_circuit = dual(circuit);
    CompiledCircuit r = rewrite(dual_circuit, dual_order, policy, {.strict_budget = options.strict_budget});

    // Dualize R(C*) back. Bindings in R(C*) become measurements of the same
    // logical qubit (into its original clbit, or nothing if it was traced
    // out); measurements become Prepare, or Reset on an already used wire.
    CompiledCircuit out;
    out.policy = policy;
    out.via_dual = true;
    out.order.assign(dual_order.begin(), dual_order.end());
    out.circuit.num_qubits = r.circuit.num_qubits;
    out.circuit.num_clbits = circuit.num_clbits;
    out.circuit.metadata = circuit.metadata;
    out.physical_width = r.physical_width;

    std::vector<bool> used(r.circuit.num_qubits, false);
    auto emit = [&](Operation op, std::optional<QubitId> logical) {
        for (QubitId p : op.qubits) {
            used[p] = true;
        }
        out.circuit.ops.push_back(std::move(op));
        out.op_logical.push_back(logical);
    };

    for (size_t k = r.circuit.ops.size(); k-- > 0;) {
        const Operation &op = r.circuit.ops[k];
        const std::optional<QubitId> logical = r.op_logical[k];
        switch (op.kind) {
            case OpKind::Gate: {
                std::optional<Matrix> m;
                if (op.matrix) {
                    m = op.matrix->adjoint();
                }
                emit(Operation::gate(adjoint_label(op.label), op.qubits, op.params, std::move(m)), std::nullopt);
                break;
            }
            case OpKind::Measure: {
                uint32_t p = op.qubit();
                emit(used[p] ? Operation::reset(p) : Operation::prepare(p), logical);
                break;
            }
            case OpKind::Prepare:
            case OpKind::Reset:
                if (logical && cones.clbit[*logical]) {
                    emit(Operation::measure(op.qubit(), *cones.clbit[*logical]), logical);
                    out.clbit_map[*logical] = *cones.clbit[*logical];
                }
                break;
        }
    }

    if (options.trailing_resets) {
        add_trailing_resets(out);
    }
    out.lifetimes = collect_lifetimes(out.circuit, out.op_logical);
    annotate_metadata(out);
    return out;
}

void annotate_metadata(CompiledCircuit &compiled) {
    auto &md = compiled.circuit.metadata;
    md["order"] = join_order(compiled.order);
    md["policy"] = compiled.policy.to_string();
    md["physical_width"] = std::to_string(compiled.physical_width);
    md["via_dual"] = compiled.via_dual ? "true" : "false";
    std::string map = "{";
    bool first = true;
    for (const auto &[q, c] : compiled.clbit_map) {
        map += (first ? "\"" : ",\"") + std::to_string(q) + "\":" + std::to_string(c);
        first = false;
    }
    md["clbit_map"] = map + "}";
}

}  // namespace qreuse
