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
#include <optional>
#include <string>
#include <vector>

#include "qreuse/cones.hpp"

namespace qreuse {

struct ExactResult {
    MeasurementOrder order;
    bool optimal = false;
    uint64_t nodes_explored = 0;
    double elapsed = 0;

    size_t width() const { return order.width; }
};

struct ExactOptions {
    double time_limit = 600;  // seconds, must be > 0
    std::optional<std::vector<QubitId>> hint;
    /// Seed the incumbent with greedy_brute_first when no hint is given. With
    /// seeding off and no hint, a timeout before the first complete order
    /// throws SearchTimeout.
    bool seed_with_greedy = true;
};

/// Minimum-width measurement order by depth-first branch and bound.
///
/// Children are expanded by ascending number of new inputs (ties by index).
/// Outputs whose cone is already covered are measured immediately, outputs
/// with identical cones are branched on only once, and measured-set states
/// that were already reached with an equal or lower running peak are pruned.
/// On timeout the incumbent is returned with optimal == false.
ExactResult exact_order(const ConeMap &cones, const ExactOptions &options = {});

/// Exhaustive search over all permutations; returns the lexicographically
/// smallest optimal order. Rejects more than 9 outputs.
ExactResult brute_force_order(const ConeMap &cones);

/// Binary assignment of the qubit-reuse constraint model: m[q][t] == 1 when
/// output q is measured at step t, c[q][t] == 1 when q is needed to run the
/// circuit up to step t. Rows are indexed by dense output position.
struct ReuseAssignment {
    std::vector<std::vector<uint8_t>> m;
    std::vector<std::vector<uint8_t>> c;
    int64_t cost = 0;
};

ReuseAssignment assignment_from_order(const ConeMap &cones, const std::vector<QubitId> &order);

struct ConstraintViolation {
    int constraint;  // 1..7
    std::string detail;
};

/// Checks all seven constraints of the model. Empty means feasible with the
/// stated cost.
std::vector<ConstraintViolation> check_constraints(const ConeMap &cones, const ReuseAssignment &assignment);

}  // namespace qreuse
