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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qreuse/circuit.hpp"
#include "qreuse/cones.hpp"

namespace qreuse {

/// How logical qubits are bound to physical wires.
///
/// ReuseFirst takes a freed wire whenever one is available. NewFirstUntil
/// opens fresh wires until `budget` of them exist and only then reuses.
struct AllocationPolicy {
    enum class Kind { ReuseFirst, NewFirstUntil };
    Kind kind = Kind::ReuseFirst;
    size_t budget = 0;

    static AllocationPolicy reuse_first() { return {}; }
    static AllocationPolicy new_first_until(size_t budget) { return {Kind::NewFirstUntil, budget}; }

    /// "reuse-first" or "new-first-until:<budget>".
    std::string to_string() const;
    static std::optional<AllocationPolicy> parse(std::string_view text);
};

struct RewriteOptions {
    /// Throw when NewFirstUntil's budget is below what the order needs instead
    /// of opening extra wires.
    bool strict_budget = false;
    /// Append a Reset after the last measurement on every wire.
    bool trailing_resets = false;
};

/// One logical qubit's stay on a physical wire, as op indices in the
/// compiled circuit (begin = the Prepare/Reset that binds it).
struct WireLifetime {
    QubitId logical = 0;
    uint32_t physical = 0;
    size_t begin_op = 0;
    size_t end_op = 0;
    bool reused = false;

    bool operator==(const WireLifetime &other) const = default;
};

struct CompiledCircuit {
    Circuit circuit;
    size_t physical_width = 0;
    /// Original measured output -> clbit in `circuit`.
    std::map<QubitId, ClbitId> clbit_map;
    std::vector<WireLifetime> lifetimes;
    /// Logical qubit bound by each Prepare/Reset or read by each Measure.
    std::vector<std::optional<QubitId>> op_logical;
    std::vector<QubitId> order;
    AllocationPolicy policy;
    bool via_dual = false;
};

/// Rewrites a measurement-terminated circuit to measure its outputs in
/// `order`, reusing measured wires.
///
/// For each output in turn, the not-yet-emitted gates of its cone are emitted
/// in original order; logical inputs are bound to wires when first touched
/// (Prepare on a fresh wire, Reset on a reused one, FIFO pool); then the output
/// is measured into its original clbit and its wire is freed.
CompiledCircuit rewrite(const Circuit &circuit, std::span<const QubitId> order, AllocationPolicy policy,
                        RewriteOptions options = {});

/// Same as rewrite, but compiles dual(circuit) along `dual_order` and
/// dualizes the result back, restoring the original clbits.
CompiledCircuit rewrite_via_dual(const Circuit &circuit, std::span<const QubitId> dual_order,
                                 AllocationPolicy policy, RewriteOptions options = {});

/// Writes order/policy/physical_width/clbit_map into circuit metadata.
void annotate_metadata(CompiledCircuit &compiled);

}  // namespace qreuse
