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


#include "qreuse/pipeline.hpp"

#include "qreuse/cones.hpp"
#include "qreuse/exact.hpp"

namespace qreuse {

OrderResult run_strategy(const ConeMap &cones, const CompileOptions &options) {
    switch (options.strategy) {
        case Strategy::Greedy:
            return greedy_order(cones);
        case Strategy::GreedyBruteFirst:
            return greedy_brute_first(cones);
        case Strategy::Exact:
        case Strategy::BruteForce: {
            ExactResult e;
            if (options.strategy == Strategy::Exact) {
                e = exact_order(cones, {options.time_limit, options.hint, options.seed_exact});
            } else {
                e = brute_force_order(cones);
            }
            OrderResult r;
            r.order = std::move(e.order);
            r.strategy = options.strategy;
            r.optimal = e.optimal;
            r.elapsed = e.elapsed;
            r.nodes_explored = e.nodes_explored;
            return r;
        }
    }
    return {};
}

OrderResult compile_order(const Circuit &circuit, const CompileOptions &options) {
    OrderResult direct = run_strategy(compute_cones(circuit, {.with_gates = false}), options);
    if (!options.use_dual) {
        return direct;
    }
    CompileOptions dual_options = options;
    dual_options.hint.reset();
    OrderResult flipped = run_strategy(compute_cones(dual(circuit), {.with_gates = false}), dual_options);
    flipped.via_dual = true;
    if (flipped.width() < direct.width()) {
        flipped.elapsed += direct.elapsed;
        flipped.optimal = flipped.optimal || direct.optimal;
        return flipped;
    }
    direct.elapsed += flipped.elapsed;
    direct.optimal = direct.optimal || flipped.optimal;
    return direct;
}

Compilation compile(const Circuit &circuit, const CompileOptions &options, AllocationPolicy policy,
                    RewriteOptions rewrite_options) {
    Compilation out;
    out.order = compile_order(circuit, options);
    if (out.order.via_dual) {
        out.compiled = rewrite_via_dual(circuit, out.order.order.order, policy, rewrite_options);
    } else {
        out.compiled = rewrite(circuit, out.order.order.order, policy, rewrite_options);
    }
    return out;
}

}  // namespace qreuse
