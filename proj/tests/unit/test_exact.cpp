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


#include <gtest/gtest.h>

#include "qreuse/cones.hpp"
#include "qreuse/errors.hpp"
#include "qreuse/exact.hpp"
#include "qreuse/generators.hpp"
#include "qreuse/greedy.hpp"
#include "test_util.hpp"

namespace qreuse {
namespace {

ConeMap cones_of(const Circuit &c) { return compute_cones(c, {.with_gates = false}); }

TEST(Exact, Chain3) {
    ExactResult r = exact_order(cones_of(testing::chain3()));
    EXPECT_EQ(r.width(), 2u);
    EXPECT_TRUE(r.optimal);
    EXPECT_EQ(r.order.order, (std::vector<QubitId>{0, 1, 2}));
}

TEST(Exact, Brickwork) {
    ExactResult r = exact_order(cones_of(brickwork_1d(10, 1, true)));
    EXPECT_EQ(r.width(), 4u);
    EXPECT_TRUE(r.optimal);
}

TEST(BruteForce, SmallCases) {
    ExactResult chain = brute_force_order(cones_of(testing::chain3()));
    EXPECT_EQ(chain.width(), 2u);
    EXPECT_EQ(chain.order.order, (std::vector<QubitId>{0, 1, 2}));
    EXPECT_EQ(chain.nodes_explored, 6u);

    Circuit free(4, 4);
    for (QubitId q = 0; q < 4; q++) {
        free.prepare(q).measure(q, q);
    }
    EXPECT_EQ(brute_force_order(cones_of(free)).width(), 1u);
    EXPECT_EQ(brute_force_order(cones_of(qaoa_maxcut(complete_graph(4), {0.3}, {0.7}))).width(), 4u);
    EXPECT_THROW(brute_force_order(cones_of(brickwork_1d(10, 1, true))), std::invalid_argument);
}

TEST(Exact, MatchesBruteForceOnRandomCircuits) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        ConeMap cones = cones_of(random_circuit(6, 8, seed));
        ExactResult e = exact_order(cones);
        ExactResult b = brute_force_order(cones);
        EXPECT_EQ(e.width(), b.width()) << "seed " << seed;
        EXPECT_TRUE(e.optimal);
        EXPECT_EQ(e.width(), width_of_order(cones, e.order.order));
    }
    for (uint64_t seed = 100; seed < 130; seed++) {
        ConeMap cones = cones_of(testing::random_small(seed));
        EXPECT_EQ(exact_order(cones, {.seed_with_greedy = false}).width(), brute_force_order(cones).width());
    }
}

TEST(Exact, NeverWorseThanGreedy) {
    for (uint64_t seed = 0; seed < 30; seed++) {
        ConeMap cones = cones_of(random_circuit(14, 24, seed));
        EXPECT_LE(exact_order(cones).width(), greedy_brute_first(cones).width());
    }
}

TEST(Exact, HintBoundsResult) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        ConeMap cones = cones_of(random_circuit(10, 16, seed));
        std::vector<QubitId> hint(cones.outputs.rbegin(), cones.outputs.rend());
        ExactResult r = exact_order(cones, {.time_limit = 600, .hint = hint});
        EXPECT_LE(r.width(), width_of_order(cones, hint));
        EXPECT_TRUE(r.optimal);
        EXPECT_EQ(r.width(), exact_order(cones).width());
    }
    ConeMap cones = cones_of(testing::chain3());
    std::vector<QubitId> bad{0, 0, 1};
    EXPECT_THROW(exact_order(cones, {.hint = bad}), std::invalid_argument);
}

TEST(Exact, RejectsNonPositiveTimeLimit) {
    ConeMap cones = cones_of(testing::chain3());
    EXPECT_THROW(exact_order(cones, {.time_limit = 0}), std::invalid_argument);
    EXPECT_THROW(exact_order(cones, {.time_limit = -1}), std::invalid_argument);
}

TEST(Exact, TimeoutWithoutIncumbentThrows) {
    ConeMap cones = cones_of(qaoa_maxcut(random_u3r_graph(60, 1), {0.3, 0.3}, {0.7, 0.7}));
    EXPECT_THROW(exact_order(cones, {.time_limit = 1e-12, .seed_with_greedy = false}), SearchTimeout);
}

TEST(Exact, TimeoutKeepsIncumbent) {
    ConeMap cones = cones_of(qaoa_maxcut(random_u3r_graph(60, 1), {0.3}, {0.7}));
    OrderResult seed = greedy_brute_first(cones);
    ExactResult r = exact_order(cones, {.time_limit = 1e-12});
    EXPECT_FALSE(r.optimal);
    EXPECT_EQ(r.width(), seed.width());
    EXPECT_EQ(r.width(), width_of_order(cones, r.order.order));
}

TEST(Exact, AnytimeMonotone) {
    ConeMap cones = cones_of(qaoa_maxcut(random_u3r_graph(30, 4), {0.3}, {0.7}));
    size_t previous = SIZE_MAX;
    for (double limit : {1e-12, 1e-4, 1e-2, 1.0}) {
        size_t w = exact_order(cones, {.time_limit = limit}).width();
        EXPECT_LE(w, previous) << limit;
        previous = w;
    }
}

TEST(Constraints, OrdersFromSolversSatisfyModel) {
    for (uint64_t seed = 0; seed < 30; seed++) {
        ConeMap cones = cones_of(testing::random_small(seed));
        for (const std::vector<QubitId> &order :
             {exact_order(cones).order.order, greedy_order(cones).order.order, cones.outputs}) {
            ReuseAssignment a = assignment_from_order(cones, order);
            EXPECT_TRUE(check_constraints(cones, a).empty()) << "seed " << seed;
            EXPECT_EQ(static_cast<size_t>(a.cost), width_of_order(cones, order));
        }
    }
}

std::vector<int> violated(const ConeMap &cones, const ReuseAssignment &a) {
    std::vector<int> ids;
    for (const ConstraintViolation &v : check_constraints(cones, a)) {
        ids.push_back(v.constraint);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

TEST(Constraints, DetectsCorruptedAssignments) {
    ConeMap cones = cones_of(testing::chain3());
    const std::vector<QubitId> order{0, 1, 2};
    ReuseAssignment good = assignment_from_order(cones, order);
    ASSERT_TRUE(violated(cones, good).empty());

    ReuseAssignment low_cost = good;
    low_cost.cost = 1;
    EXPECT_EQ(violated(cones, low_cost), std::vector<int>{1});

    ReuseAssignment twice = good;
    twice.m[0][1] = 1;  // qubit 0 measured at t=0 and t=1
    auto ids = violated(cones, twice);
    EXPECT_NE(std::find(ids.begin(), ids.end(), 6), ids.end());
    EXPECT_NE(std::find(ids.begin(), ids.end(), 7), ids.end());

    ReuseAssignment dropped = good;
    dropped.c[2][1] = 0;  // qubit 2 is in C_1 but never marked live
    ids = violated(cones, dropped);
    EXPECT_NE(std::find(ids.begin(), ids.end(), 2), ids.end());

    ReuseAssignment lingering = good;
    lingering.c[0][2] = 1;  // still live after its measurement
    ids = violated(cones, lingering);
    EXPECT_NE(std::find(ids.begin(), ids.end(), 5), ids.end());

    ReuseAssignment unneeded = good;
    unneeded.c[2][2] = 0;  // measured while not live
    ids = violated(cones, unneeded);
    EXPECT_NE(std::find(ids.begin(), ids.end(), 4), ids.end());
}

}  // namespace
}  // namespace qreuse
