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

#include "qreuse/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "qreuse/errors.hpp"

namespace qreuse {

const char *op_kind_name(OpKind kind) {
    switch (kind) {
        case OpKind::Prepare:
            return "prep";
        case OpKind::Gate:
            return "gate";
        case OpKind::Measure:
            return "measure";
        case OpKind::Reset:
            return "reset";
    }
    return "?";
}

Operation Operation::prepare(QubitId q) {
    Operation op;
    op.kind = OpKind::Prepare;
    op.qubits = {q};
    return op;
}

Operation Operation::measure(QubitId q, ClbitId c) {
    Operation op;
    op.kind = OpKind::Measure;
    op.qubits = {q};
    op.clbit = c;
    return op;
}

Operation Operation::reset(QubitId q) {
    Operation op;
    op.kind = OpKind::Reset;
    op.qubits = {q};
    return op;
}

Operation Operation::gate(std::string label, std::vector<QubitId> qubits, std::vector<double> params,
                          std::optional<Matrix> matrix) {
    Operation op;
    op.kind = OpKind::Gate;
    op.label = std::move(label);
    op.qubits = std::move(qubits);
    op.params = std::move(params);
    op.matrix = std::move(matrix);
    return op;
}

std::optional<Matrix> Operation::resolved_matrix() const {
    if (matrix) {
        return matrix;
    }
    return standard_gate_matrix(label, params, qubits.size());
}

Circuit &Circuit::prepare(QubitId q) {
    ops.push_back(Operation::prepare(q));
    return *this;
}

Circuit &Circuit::measure(QubitId q, ClbitId c) {
    ops.push_back(Operation::measure(q, c));
    return *this;
}

Circuit &Circuit::reset(QubitId q) {
    ops.push_back(Operation::reset(q));
    return *this;
}

Circuit &Circuit::gate(std::string label, std::vector<QubitId> qubits, std::vector<double> params,
                       std::optional<Matrix> matrix) {
    ops.push_back(Operation::gate(std::move(label), std::move(qubits), std::move(params), std::move(matrix)));
    return *this;
}

size_t Circuit::gate_count() const { return count(OpKind::Gate); }

size_t Circuit::count(OpKind kind) const {
    return std::count_if(ops.begin(), ops.end(), [&](const Operation &op) { return op.kind == kind; });
}

namespace {

enum class WireState : uint8_t { Unprepared, Live, Measured };

}  // namespace

std::vector<Violation> validate(const Circuit &circuit) {
    std::vector<Violation> out;
    std::vector<WireState> state(circuit.num_qubits, WireState::Unprepared);
    std::vector<std::optional<size_t>> writer(circuit.num_clbits);

    auto report = [&](size_t i, const char *rule, std::string detail) {
        out.push_back(Violation{i, rule, std::move(detail)});
    };

    for (size_t i = 0; i < circuit.ops.size(); i++) {
        const Operation &op = circuit.ops[i];
        bool in_range = true;
        for (QubitId q : op.qubits) {
            if (q >= circuit.num_qubits) {
                report(i, "qubit-range", "qubit " + std::to_string(q) + " >= " + std::to_string(circuit.num_qubits));
                in_range = false;
            }
        }
        if (!in_range) {
            continue;
        }
        if (op.kind != OpKind::Gate && op.qubits.size() != 1) {
            report(i, "arity", std::string(op_kind_name(op.kind)) + " must act on exactly one qubit");
            continue;
        }
        if (op.kind == OpKind::Gate) {
            if (op.qubits.empty()) {
                report(i, "arity", "gate acts on no qubits");
                continue;
            }
            std::vector<QubitId> sorted = op.qubits;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                report(i, "duplicate-qubit", "duplicate qubit in gate '" + op.label + "'");
                continue;
            }
            if (op.matrix) {
                if (op.qubits.size() >= 32 || op.matrix->dim() != (size_t{1} << op.qubits.size())) {
                    report(i, "matrix-shape", "matrix dimension does not match gate arity");
                } else if (!op.matrix->is_unitary(1e-10)) {
                    report(i, "matrix-unitary", "gate matrix is not unitary");
                }
            }
            for (QubitId q : op.qubits) {
                if (state[q] == WireState::Unprepared) {
                    report(i, "unprepared", "gate on unprepared qubit " + std::to_string(q));
                } else if (state[q] == WireState::Measured) {
                    report(i, "after-measure", "gate on measured qubit " + std::to_string(q));
                }
            }
            continue;
        }

        QubitId q = op.qubit();
        switch (op.kind) {
            case OpKind::Prepare:
                if (state[q] == WireState::Live) {
                    report(i, "double-prepare", "prepare on live qubit " + std::to_string(q));
                }
                state[q] = WireState::Live;
                break;
            case OpKind::Reset:
                if (state[q] == WireState::Unprepared) {
                    report(i, "unprepared", "reset on unprepared qubit " + std::to_string(q));
                }
                state[q] = WireState::Live;
                break;
            case OpKind::Measure:
                if (state[q] == WireState::Unprepared) {
                    report(i, "unprepared", "measure on unprepared qubit " + std::to_string(q));
                } else if (state[q] == WireState::Measured) {
                    report(i, "after-measure", "measure on measured qubit " + std::to_string(q));
                }
                state[q] = WireState::Measured;
                if (!op.clbit || *op.clbit >= circuit.num_clbits) {
                    report(i, "clbit-range", "measure without a valid clbit");
                } else if (writer[*op.clbit]) {
                    report(i, "clbit-rewritten",
                           "clbit " + std::to_string(*op.clbit) + " already written by op " +
                               std::to_string(*writer[*op.clbit]));
                } else {
                    writer[*op.clbit] = i;
                }
                break;
            case OpKind::Gate:
                break;
        }
    }
    for (ClbitId c = 0; c < circuit.num_clbits; c++) {
        if (!writer[c]) {
            out.push_back(Violation{std::nullopt, "clbit-unwritten", "clbit " + std::to_string(c) + " is never written"});
        }
    }
    return out;
}

void require_valid(const Circuit &circuit) {
    auto violations = validate(circuit);
    if (violations.empty()) {
        return;
    }
    const Violation &v = violations.front();
    std::ostringstream msg;
    msg << "invalid circuit: " << v.rule;
    if (v.op_index) {
        msg << " at op " << *v.op_index;
    }
    msg << ": " << v.detail;
    if (violations.size() > 1) {
        msg << " (+" << violations.size() - 1 << " more)";
    }
    throw InvalidCircuit(msg.str());
}

Circuit dual(const Circuit &circuit) {
    require_valid(circuit);

    // Forward pass: does each Reset act on a live wire (measure-and-prepare)
    // or on an already measured one (plain prepare)?
    std::vector<bool> reset_on_live(circuit.ops.size(), false);
    {
        std::vector<bool> live(circuit.num_qubits, false);
        for (size_t i = 0; i < circuit.ops.size(); i++) {
            const Operation &op = circuit.ops[i];
            switch (op.kind) {
                case OpKind::Prepare:
                    live[op.qubit()] = true;
                    break;
                case OpKind::Reset:
                    reset_on_live[i] = live[op.qubit()];
                    live[op.qubit()] = true;
                    break;
                case OpKind::Measure:
                    live[op.qubit()] = false;
                    break;
                case OpKind::Gate:
                    break;
            }
        }
    }

    Circuit out(circuit.num_qubits, 0);
    out.metadata = circuit.metadata;
    std::vector<bool> live(circuit.num_qubits, false);
    auto ensure_live = [&](QubitId q) {
        if (!live[q]) {
            out.prepare(q);
            live[q] = true;
        }
    };
    auto measure_fresh = [&](QubitId q) {
        out.measure(q, out.num_clbits++);
        live[q] = false;
    };

    for (size_t k = circuit.ops.size(); k-- > 0;) {
        const Operation &op = circuit.ops[k];
        switch (op.kind) {
            case OpKind::Gate: {
                for (QubitId q : op.qubits) {
                    ensure_live(q);
                }
                std::optional<Matrix> m;
                if (op.matrix) {
                    m = op.matrix->adjoint();
                }
                out.gate(adjoint_label(op.label), op.qubits, op.params, std::move(m));
                break;
            }
            case OpKind::Measure:
                out.prepare(op.qubit());
                live[op.qubit()] = true;
                break;
            case OpKind::Prepare:
                ensure_live(op.qubit());
                measure_fresh(op.qubit());
                break;
            case OpKind::Reset:
                ensure_live(op.qubit());
                measure_fresh(op.qubit());
                if (reset_on_live[k]) {
                    out.prepare(op.qubit());
                    live[op.qubit()] = true;
                }
                break;
        }
    }
    return out;
}

bool is_measurement_terminated(const Circuit &circuit) {
    std::vector<uint8_t> prepared(circuit.num_qubits, 0);
    std::vector<bool> measured(circuit.num_qubits, false);
    for (const Operation &op : circuit.ops) {
        for (QubitId q : op.qubits) {
            if (q >= circuit.num_qubits || measured[q]) {
                return false;
            }
        }
        switch (op.kind) {
            case OpKind::Prepare:
                if (prepared[op.qubit()]++) {
                    return false;
                }
                break;
            case OpKind::Reset:
                return false;
            case OpKind::Measure:
                if (!prepared[op.qubit()]) {
                    return false;
                }
                measured[op.qubit()] = true;
                break;
            case OpKind::Gate:
                for (QubitId q : op.qubits) {
                    if (!prepared[q]) {
                        return false;
                    }
                }
                break;
        }
    }
    return true;
}

}  // namespace qreuse
