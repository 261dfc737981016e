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
#include <vector>

#include "qreuse/circuit.hpp"
#include "qreuse/greedy.hpp"
#include "qreuse/rewriter.hpp"

namespace qreuse {

struct CompileOptions {
    Strategy strategy = Strategy::GreedyBruteFirst;
    bool use_dual = true;
    double time_limit = 600;  // exact only
    std::optional<std::vector<QubitId>> hint;  // exact only, applies to the direct side
    bool seed_exact = true;
};

/// Runs the strategy on the circuit and, when enabled, on its dual. The dual
/// result is taken only when strictly narrower; its order then refers to
/// dual(circuit) and `via_dual` is set.
OrderResult compile_order(const Circuit &circuit, const CompileOptions &options = {});

/// Strategy dispatch on precomputed cones.
OrderResult run_strategy(const ConeMap &cones, const CompileOptions &options);

struct Compilation {
    OrderResult order;
    CompiledCircuit compiled;
};

/// compile_order followed by rewrite or rewrite_via_dual.
Compilation compile(const Circuit &circuit, const CompileOptions &options = {},
                    AllocationPolicy policy = AllocationPolicy::reuse_first(), RewriteOptions rewrite_options = {});

}  // namespace qreuse
