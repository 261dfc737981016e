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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qreuse/unitary.hpp"

namespace qreuse {

using QubitId = uint32_t;
using ClbitId = uint32_t;

enum class OpKind : uint8_t { Prepare, Gate, Measure, Reset };

const char *op_kind_name(OpKind kind);

/// One circuit instruction.
///
/// Prepare initializes a wire to |0>. Reset is measure-and-discard followed by
/// Prepare. Measure is in the computational basis and writes one clbit.
/// Only Gate uses `label`, `params` and `matrix`; gates without a matrix must
/// carry a standard label (see standard_gate_matrix) to be simulated.
struct Operation {
    OpKind kind = OpKind::Gate;
    std::vector<QubitId> qubits;
    std::optional<ClbitId> clbit;
    std::string label;
    std::vector<double> params;
    std::optional<Matrix> matrix;

    static Operation prepare(QubitId q);
    static Operation measure(QubitId q, ClbitId c);
    static Operation reset(QubitId q);
    static Operation gate(std::string label, std::vector<QubitId> qubits, std::vector<double> params = {},
                          std::optional<Matrix> matrix = std::nullopt);

    bool is_gate() const { return kind == OpKind::Gate; }
    QubitId qubit() const { return qubits.front(); }

    /// Explicit matrix if present, otherwise the standard gate matrix.
    std::optional<Matrix> resolved_matrix() const;

    bool operator==(const Operation &other) const = default;
};

/// Time-ordered instruction list over declared qubit and clbit counts.
/// Treated as an immutable value once built.
struct Circuit {
    uint32_t num_qubits = 0;
    uint32_t num_clbits = 0;
    std::vector<Operation> ops;
    std::map<std::string, std::string> metadata;

    Circuit() = default;
    Circuit(uint32_t num_qubits, uint32_t num_clbits) : num_qubits(num_qubits), num_clbits(num_clbits) {}

    Circuit &prepare(QubitId q);
    Circuit &measure(QubitId q, ClbitId c);
    Circuit &reset(QubitId q);
    Circuit &gate(std::string label, std::vector<QubitId> qubits, std::vector<double> params = {},
                  std::optional<Matrix> matrix = std::nullopt);

    size_t gate_count() const;
    size_t count(OpKind kind) const;

    bool operator==(const Circuit &other) const = default;
};

struct Violation {
    std::optional<size_t> op_index;  // nullopt for circuit-level rules
    std::string rule;
    std::string detail;
};

/// Checks every structural invariant; an empty result means the circuit is
/// valid. Rules: "qubit-range", "clbit-range", "arity", "duplicate-qubit",
/// "matrix-shape", "matrix-unitary", "unprepared", "double-prepare",
/// "after-measure", "clbit-rewritten", "clbit-unwritten".
std::vector<Violation> validate(const Circuit &circuit);

/// Throws InvalidCircuit summarizing the first violation, if any.
void require_valid(const Circuit &circuit);

/// Time-reversed circuit with preparations and measurements exchanged and
/// every gate replaced by its adjoint.
///
/// Prepare(q) becomes Measure(q, fresh clbit), Measure(q, c) becomes
/// Prepare(q), Reset(q) becomes Measure(q, fresh) then Prepare(q), and a
/// lifetime that ends without measurement (traced out) gets a Prepare at the
/// start of its dual lifetime. Fresh clbits are numbered in dual time order.
Circuit dual(const Circuit &circuit);

/// True when every touched qubit is prepared exactly once, measured at most
/// once as its final operation, and never reset: the input shape the compiler accepts.
bool is_measurement_terminated(const Circuit &circuit);

}  // namespace qreuse
