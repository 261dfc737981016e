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

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "qreuse/bitset.hpp"
#include "qreuse/circuit.hpp"

namespace qreuse {

/// Past causal cones of every output of a measurement-terminated circuit.
///
/// Outputs are the prepared qubits, ascending. Qubits that are never measured
/// are traced-out outputs: they still occupy a wire until their step in a
/// measurement order. Cone vectors are indexed by qubit id; entries for
/// untouched qubits are empty.
struct ConeMap {
    uint32_t num_qubits = 0;
    size_t num_ops = 0;
    std::vector<QubitId> outputs;
    std::vector<Bitset> inputs;                   // C_q as a set of qubit ids
    std::vector<Bitset> gates;                    // op indices in the cone; empty when not requested
    std::vector<std::optional<ClbitId>> clbit;    // nullopt for traced-out outputs

    bool has_gate_cones() const { return !gates.empty(); }
    size_t cone_size(QubitId q) const { return inputs[q].count(); }
    bool is_output(QubitId q) const;
};

struct ConeOptions {
    bool with_gates = true;
};

/// Backward-sweep cone computation, parallel over outputs.
///
/// Throws UnsupportedInput if the circuit is not measurement-terminated
/// (already contains reuse or repeated preparations).
ConeMap compute_cones(const Circuit &circuit, ConeOptions options = {});

/// Single-threaded reference for compute_cones. Same result bit for bit.
ConeMap compute_cones_serial(const Circuit &circuit, ConeOptions options = {});

/// A measurement order and the peak number of live wires it needs.
struct MeasurementOrder {
    std::vector<QubitId> order;
    size_t width = 0;

    bool operator==(const MeasurementOrder &other) const = default;
};

/// Throws std::invalid_argument unless `order` is a permutation of the outputs.
void require_permutation(const ConeMap &cones, std::span<const QubitId> order);

/// Peak live wires: max over t of |union of C_order[0..t]| - t, i.e. wires
/// live just before the t-th measurement (the qubit being measured counts).
size_t width_of_order(const ConeMap &cones, std::span<const QubitId> order);

/// Keeps only the gates in the cones of `outputs`, plus the preparations of
/// the qubits they touch and the measurements of `outputs`. Clbits are
/// renumbered densely in original clbit order.
Circuit restrict_to_outputs(const Circuit &circuit, const std::set<QubitId> &outputs);

}  // namespace qreuse
