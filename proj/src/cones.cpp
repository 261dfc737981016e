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

#include "qreuse/cones.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qreuse/errors.hpp"

namespace qreuse {

namespace {

ConeMap prepare_map(const Circuit &circuit, ConeOptions options) {
    require_valid(circuit);
    if (!is_measurement_terminated(circuit)) {
        throw UnsupportedInput(
            "circuit already contains reuse (reset, repeated prepare, or mid-circuit measurement); "
            "only measurement-terminated circuits can be analyzed");
    }
    ConeMap cones;
    cones.num_qubits = circuit.num_qubits;
    cones.num_ops = circuit.ops.size();
    cones.inputs.assign(circuit.num_qubits, Bitset(circuit.num_qubits));
    if (options.with_gates) {
        cones.gates.assign(circuit.num_qubits, Bitset(circuit.ops.size()));
    }
    cones.clbit.assign(circuit.num_qubits, std::nullopt);
    std::vector<bool> prepared(circuit.num_qubits, false);
    for (const Operation &op : circuit.ops) {
        if (op.kind == OpKind::Prepare) {
            prepared[op.qubit()] = true;
        } else if (op.kind == OpKind::Measure) {
            cones.clbit[op.qubit()] = op.clbit;
        }
    }
    for (QubitId q = 0; q < circuit.num_qubits; q++) {
        if (prepared[q]) {
            cones.outputs.push_back(q);
        }
    }
    return cones;
}

// One backward sweep: start from {q} and absorb the full support of every
// gate that touches the current set, scanning from the last op to the first.
void sweep(const Circuit &circuit, QubitId q, Bitset &inputs, Bitset *gates) {
    inputs.set(q);
    for (size_t k = circuit.ops.size(); k-- > 0;) {
        const Operation &op = circuit.ops[k];
        if (!op.is_gate()) {
            continue;
        }
        bool hit = false;
        for (QubitId r : op.qubits) {
            if (inputs.test(r)) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            continue;
        }
        for (QubitId r : op.qubits) {
            inputs.set(r);
        }
        if (gates) {
            gates->set(k);
        }
    }
}

}  // namespace

bool ConeMap::is_output(QubitId q) const {
    return std::binary_search(outputs.begin(), outputs.end(), q);
}

ConeMap compute_cones(const Circuit &circuit, ConeOptions options) {
    ConeMap cones = prepare_map(circuit, options);
    const auto n = static_cast<int64_t>(cones.outputs.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (int64_t i = 0; i < n; i++) {
        QubitId q = cones.outputs[i];
        sweep(circuit, q, cones.inputs[q], options.with_gates ? &cones.gates[q] : nullptr);
    }
    return cones;
}

ConeMap compute_cones_serial(const Circuit &circuit, ConeOptions options) {
    ConeMap cones = prepare_map(circuit, options);
    for (QubitId q : cones.outputs) {
        sweep(circuit, q, cones.inputs[q], options.with_gates ? &cones.gates[q] : nullptr);
    }
    return cones;
}

void require_permutation(const ConeMap &cones, std::span<const QubitId> order) {
    if (order.size() != cones.outputs.size()) {
        throw std::invalid_argument("order has " + std::to_string(order.size()) + " entries, expected " +
                                    std::to_string(cones.outputs.size()));
    }
    std::vector<bool> seen(cones.num_qubits, false);
    for (QubitId q : order) {
        if (q >= cones.num_qubits || !cones.is_output(q)) {
            throw std::invalid_argument("order entry " + std::to_string(q) + " is not an output qubit");
        }
        if (seen[q]) {
            throw std::invalid_argument("order repeats qubit " + std::to_string(q));
        }
        seen[q] = true;
    }
}

size_t width_of_order(const ConeMap &cones, std::span<const QubitId> order) {
    require_permutation(cones, order);
    Bitset used(cones.num_qubits);
    size_t width = 0;
    for (size_t t = 0; t < order.size(); t++) {
        used |= cones.inputs[order[t]];
        width = std::max(width, used.count() - t);
    }
    return width;
}

Circuit restrict_to_outputs(const Circuit &circuit, const std::set<QubitId> &outputs) {
    if (outputs.empty()) {
        throw std::invalid_argument("output set is empty");
    }
    ConeMap cones = compute_cones(circuit);
    Bitset keep_gates(circuit.ops.size());
    Bitset involved(circuit.num_qubits);
    for (QubitId q : outputs) {
        if (q >= circuit.num_qubits || !cones.clbit[q]) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " is not a measured output");
        }
        keep_gates |= cones.gates[q];
        involved |= cones.inputs[q];
    }

    std::vector<ClbitId> kept_clbits;
    for (QubitId q : outputs) {
        kept_clbits.push_back(*cones.clbit[q]);
    }
    std::sort(kept_clbits.begin(), kept_clbits.end());

    Circuit out(circuit.num_qubits, static_cast<uint32_t>(kept_clbits.size()));
    out.metadata = circuit.metadata;
    for (size_t k = 0; k < circuit.ops.size(); k++) {
        const Operation &op = circuit.ops[k];
        switch (op.kind) {
            case OpKind::Gate:
                if (keep_gates.test(k)) {
                    out.ops.push_back(op);
                }
                break;
            case OpKind::Prepare:
                if (involved.test(op.qubit())) {
                    out.ops.push_back(op);
                }
                break;
            case OpKind::Measure:
                if (outputs.contains(op.qubit())) {
                    auto it = std::lower_bound(kept_clbits.begin(), kept_clbits.end(), *op.clbit);
                    out.measure(op.qubit(), static_cast<ClbitId>(it - kept_clbits.begin()));
                }
                break;
            case OpKind::Reset:
                break;
        }
    }
    std::string listed;
    for (QubitId q : outputs) {
        listed += (listed.empty() ? "" : ",") + std::to_string(q);
    }
    out.metadata["restricted_outputs"] = listed;
    return out;
}

}  // namespace qreuse
