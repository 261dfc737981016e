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

#include "qreuse/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

namespace qreuse {

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Greedy:
            return "greedy";
        case Strategy::GreedyBruteFirst:
            return "greedy-brute";
        case Strategy::Exact:
            return "exact";
        case Strategy::BruteForce:
            return "brute-force";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
    for (Strategy s : {Strategy::Greedy, Strategy::GreedyBruteFirst, Strategy::Exact, Strategy::BruteForce}) {
        if (strategy_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shared read-only data for repeated greedy runs over one ConeMap. Outputs are
// addressed by dense index (position in cones.outputs, which is ascending, so
// index order equals qubit order for tie-breaking).
struct GreedyTables {
    const ConeMap &cones;
    std::vector<uint32_t> cone_size;                  // by dense index
    std::vector<std::vector<uint32_t>> containing;    // qubit -> dense indices whose cone holds it

    explicit GreedyTables(const ConeMap &c) : cones(c), containing(c.num_qubits) {
        cone_size.resize(c.outputs.size());
        for (uint32_t i = 0; i < c.outputs.size(); i++) {
            const Bitset &cone = c.inputs[c.outputs[i]];
            cone_size[i] = static_cast<uint32_t>(cone.count());
            cone.for_each([&](size_t r) { containing[r].push_back(i); });
        }
    }
};

// One greedy pass from a fixed first output. `new_inputs[i]` tracks
// |C_i \ used| incrementally: each newly used qubit decrements the counters of
// the cones that contain it.
size_t greedy_run(const GreedyTables &tables, uint32_t first, std::vector<QubitId> *order_out) {
    const ConeMap &cones = tables.cones;
    const size_t n = cones.outputs.size();
    std::vector<uint32_t> new_inputs = tables.cone_size;
    std::vector<bool> done(n, false);
    Bitset used(cones.num_qubits);
    size_t used_count = 0;
    size_t width = 0;
    if (order_out) {
        order_out->clear();
        order_out->reserve(n);
    }

    uint32_t pick = first;
    for (size_t t = 0; t < n; t++) {
        cones.inputs[cones.outputs[pick]].for_each([&](size_t r) {
            if (used.test(r)) {
                return;
            }
            used.set(r);
            used_count++;
            for (uint32_t i : tables.containing[r]) {
                new_inputs[i]--;
            }
        });
        width = std::max(width, used_count - t);
        done[pick] = true;
        if (order_out) {
            order_out->push_back(cones.outputs[pick]);
        }

        uint32_t best = std::numeric_limits<uint32_t>::max();
        for (uint32_t i = 0; i < n; i++) {
            if (!done[i] && (best == std::numeric_limits<uint32_t>::max() || new_inputs[i] < new_inputs[best])) {
                best = i;
            }
        }
        pick = best;
    }
    return width;
}

uint32_t smallest_cone(const GreedyTables &tables) {
    uint32_t best = 0;
    for (uint32_t i = 1; i < tables.cone_size.size(); i++) {
        if (tables.cone_size[i] < tables.cone_size[best]) {
            best = i;
        }
    }
    return best;
}

OrderResult finish(const GreedyTables &tables, uint32_t first, Strategy strategy, Clock::time_point start) {
    OrderResult result;
    result.strategy = strategy;
    result.order.width = greedy_run(tables, first, &result.order.order);
    result.elapsed = seconds_since(start);
    return result;
}

OrderResult empty_result(Strategy strategy) {
    OrderResult r;
    r.strategy = strategy;
    r.optimal = true;
    return r;
}

}  // namespace

OrderResult greedy_order(const ConeMap &cones, std::optional<QubitId> first) {
    auto start = Clock::now();
    if (cones.outputs.empty()) {
        return empty_result(Strategy::Greedy);
    }
    GreedyTables tables(cones);
    uint32_t first_index;
    if (first) {
        auto it = std::lower_bound(cones.outputs.begin(), cones.outputs.end(), *first);
        if (it == cones.outputs.end() || *it != *first) {
            throw std::invalid_argument("first qubit " + std::to_string(*first) + " is not an output");
        }
        first_index = static_cast<uint32_t>(it - cones.outputs.begin());
    } else {
        first_index = smallest_cone(tables);
    }
    return finish(tables, first_index, Strategy::Greedy, start);
}

OrderResult greedy_brute_first(const ConeMap &cones) {
    auto start = Clock::now();
    if (cones.outputs.empty()) {
        return empty_result(Strategy::GreedyBruteFirst);
    }
    GreedyTables tables(cones);
    const auto n = static_cast<int64_t>(cones.outputs.size());
    std::vector<size_t> widths(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t i = 0; i < n; i++) {
        widths[i] = greedy_run(tables, static_cast<uint32_t>(i), nullptr);
    }
    // Deterministic reduction: first minimum in index order.
    auto best = static_cast<uint32_t>(std::min_element(widths.begin(), widths.end()) - widths.begin());
    return finish(tables, best, Strategy::GreedyBruteFirst, start);
}

OrderResult greedy_brute_first_serial(const ConeMap &cones) {
    auto start = Clock::now();
    if (cones.outputs.empty()) {
        return empty_result(Strategy::GreedyBruteFirst);
    }
    GreedyTables tables(cones);
    uint32_t best = 0;
    size_t best_width = std::numeric_limits<size_t>::max();
    for (uint32_t i = 0; i < cones.outputs.size(); i++) {
        size_t w = greedy_run(tables, i, nullptr);
        if (w < best_width) {
            best_width = w;
            best = i;
        }
    }
    return finish(tables, best, Strategy::GreedyBruteFirst, start);
}

}  // namespace qreuse
