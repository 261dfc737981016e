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
#include <string>
#include <string_view>

#include "qreuse/cones.hpp"

namespace qreuse {

enum class Strategy { Greedy, GreedyBruteFirst, Exact, BruteForce };

std::string_view strategy_name(Strategy s);
/// Accepts "greedy", "greedy-brute", "exact", "brute-force".
std::optional<Strategy> parse_strategy(std::string_view name);

struct OrderResult {
    MeasurementOrder order;
    Strategy strategy = Strategy::Greedy;
    bool via_dual = false;
    bool optimal = false;  // proven minimum (exact search completed, or brute force)
    double elapsed = 0;    // seconds
    uint64_t nodes_explored = 0;

    size_t width() const { return order.width; }
};

/// Local greedy order. Starts from `first` if given, else from the output with
/// the smallest cone; then repeatedly measures the unmeasured output whose cone
/// adds the fewest new inputs to the union so far. Ties go to the smallest
/// qubit index.
OrderResult greedy_order(const ConeMap &cones, std::optional<QubitId> first = std::nullopt);

/// Greedy order tried from every possible first output, in parallel. Returns
/// the narrowest; ties go to the smallest first qubit.
OrderResult greedy_brute_first(const ConeMap &cones);

/// Single-threaded reference for greedy_brute_first.
OrderResult greedy_brute_first_serial(const ConeMap &cones);

}  // namespace qreuse
