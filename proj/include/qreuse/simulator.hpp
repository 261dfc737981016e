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
#include <string>
#include <vector>

#include "qreuse/circuit.hpp"
#include "qreuse/rewriter.hpp"

namespace qreuse {

struct Graph;

/// Exact outcome distribution over a circuit's clbits.
///
/// Keys are '0'/'1' strings where character i is clbit i. Only outcomes with
/// nonzero probability are stored.
struct Distribution {
    uint32_t num_clbits = 0;
    std::map<std::string, double> probs;

    double total() const;
    double at(const std::string &bits) const;
};

struct SimOptions {
    uint32_t max_qubits = 14;
    size_t max_arity = 4;
    /// Branches whose conditional probability falls below this are dropped.
    double prune = 1e-14;
};

/// Statevector simulation with exact branching on every measurement.
///
/// Qubit i is bit i of the amplitude index. Measure splits into both outcomes
/// weighted by their Born probabilities; Reset and Prepare branch the same way
/// without recording a bit and then return the wire to |0>. Leaves accumulate
/// in outcome-0-first depth-first order.
Distribution exact_distribution(const Circuit &circuit, const SimOptions &options = {});

/// Total variation distance. Throws std::invalid_argument on clbit count mismatch.
double tvd(const Distribution &a, const Distribution &b);

/// Reorders a distribution's bits: output bit `permutation[i]` takes input bit i.
Distribution permute_bits(const Distribution &d, const std::vector<ClbitId> &permutation);

struct EquivalenceReport {
    bool pass = false;
    double tvd = 0;
    size_t original_support = 0;
    size_t compiled_support = 0;
};

/// Compares the original circuit against a compiled one whose outputs were
/// measured into `clbit_map[q]`; the compiled distribution is relabeled onto
/// the original clbits before comparison. Passes iff tvd < tol.
EquivalenceReport verify_equivalence(const Circuit &original, const Circuit &compiled,
                                     const std::map<QubitId, ClbitId> &clbit_map, double tol,
                                     const SimOptions &options = {});

EquivalenceReport verify_equivalence(const Circuit &original, const CompiledCircuit &compiled, double tol,
                                     const SimOptions &options = {});

/// Sum of edge weights whose endpoints differ. Character i is vertex i.
double cut_value(const Graph &graph, const std::string &bits);

/// Probability-weighted mean cut value.
double expected_cut(const Distribution &distribution, const Graph &graph);

}  // namespace qreuse
