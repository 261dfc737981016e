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
#include "qreuse/exact.hpp"
#include "qreuse/generators.hpp"
#include "qreuse/greedy.hpp"
#include "qreuse/pipeline.hpp"
#include "test_util.hpp"

namespace qreuse {
namespace {

using testing::chain3;

ConeMap cones_of(const Circuit &c) { return compute_cones(c, {.with_gates = false}); }

TEST(Greedy, Chain3) {
    OrderResult r = greedy_order(cones_of(chain3()));
    EXPECT_EQ(r.order.order, (std::vector<QubitId>{0, 1, 2}));
    EXPECT_EQ(r.width(), 2u);
    EXPECT_EQ(r.strategy, Strategy::Greedy);
    OrderResult b = greedy_brute_first(cones_of(chain3()));
    EXPECT_EQ(b.width(), 2u);
    EXPECT_EQ(b.strategy, Strategy::GreedyBruteFirst);
}

TEST(Greedy, ExplicitFirstQubit) {
    ConeMap cones = cones_of(chain3());
    OrderResult r = greedy_order(cones, 1);
    EXPECT_EQ(r.order.order.front(), 1u);
    EXPECT_EQ(r.width(), 3u);
    EXPECT_THROW(greedy_order(cones, 7), std::invalid_argument);
}

TEST(Greedy, BernsteinVaziraniUsesTwoQubits) {
    EXPECT_EQ(greedy_order(cones_of(bernstein_vazirani(8, "11101011"))).width(), 2u);
    EXPECT_EQ(greedy_order(cones_of(bernstein_vazirani(16, "1010101010101011"))).width(), 2u);
}

TEST(Greedy, CompleteGraphQaoaCannotCompress) {
    Circuit c = qaoa_maxcut(complete_graph(4), {0.3}, {0.7});
    EXPECT_EQ(greedy_order(cones_of(c)).width(), 4u);
    EXPECT_EQ(greedy_brute_first(cones_of(c)).width(), 4u);
}

TEST(Greedy, BrickworkMatchesFourK) {
    EXPECT_EQ(greedy_brute_first(cones_of(brickwork_1d(10, 1, true))).width(), 4u);
    for (uint32_t k = 1; k <= 3; k++) {
        for (uint32_t N = 4 * k + 2; N <= 4 * k + 10; N += 2) {
            EXPECT_EQ(greedy_order(cones_of(brickwork_1d(N, k, true))).width(), 4 * k) << N << " " << k;
        }
    }
}

TEST(Greedy, WidthMatchesOrderAndBruteFirstNeverWorse) {
    for (uint64_t seed = 0; seed < 60; seed++) {
        ConeMap cones = cones_of(random_circuit(12, 20, seed));
        OrderResult g = greedy_order(cones);
        OrderResult b = greedy_brute_first(cones);
        EXPECT_EQ(g.width(), width_of_order(cones, g.order.order));
        EXPECT_EQ(b.width(), width_of_order(cones, b.order.order));
        EXPECT_LE(b.width(), g.width());
        // The brute-first result is the best single-start greedy, first start
        // index winning ties.
        size_t best = SIZE_MAX;
        QubitId best_first = 0;
        for (QubitId q : cones.outputs) {
            size_t w = greedy_order(cones, q).width();
            if (w < best) {
                best = w;
                best_first = q;
            }
        }
        EXPECT_EQ(b.width(), best);
        EXPECT_EQ(b.order.order.front(), best_first);
    }
}

TEST(Greedy, ParallelBruteFirstMatchesSerial) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        ConeMap cones = cones_of(qaoa_maxcut(random_u3r_graph(60, seed), {0.3}, {0.7}));
        OrderResult a = greedy_brute_first(cones), b = greedy_brute_first_serial(cones);
        EXPECT_EQ(a.order, b.order);
    }
}

TEST(Greedy, Deterministic) {
    ConeMap cones = cones_of(qaoa_maxcut(random_u3r_graph(40, 7), {0.3}, {0.7}));
    EXPECT_EQ(greedy_order(cones).order, greedy_order(cones).order);
    EXPECT_EQ(greedy_brute_first(cones).order, greedy_brute_first(cones).order);
}

TEST(Greedy, StructuredFamilies) {
    for (uint32_t N : {3u, 6u, 10u}) {
        EXPECT_EQ(greedy_brute_first(cones_of(mps_prep(N, 2))).width(), 2u);
        EXPECT_EQ(greedy_brute_first(cones_of(mps_prep(N, 4))).width(), 3u);
        EXPECT_EQ(greedy_brute_first(cones_of(mps_prep(N, 8))).width(), 4u);
    }
    for (uint32_t D = 1; D <= 6; D++) {
        EXPECT_EQ(greedy_brute_first(cones_of(ttn(D))).width(), D + 1) << D;
    }
    for (uint32_t D = 2; D <= 5; D++) {
        CompileOptions o;
        EXPECT_EQ(compile_order(mera(D), o).width(), 2 * D - 1) << D;
        EXPECT_EQ(compile_order(qcnn(D), o).width(), 2 * D - 1) << D;
    }
}

TEST(Strategy, Names) {
    for (Strategy s : {Strategy::Greedy, Strategy::GreedyBruteFirst, Strategy::Exact, Strategy::BruteForce}) {
        EXPECT_EQ(parse_strategy(strategy_name(s)), s);
    }
    EXPECT_FALSE(parse_strategy("fastest"));
}

TEST(CompileOrder, StaggeredCircuitPrefersDual) {
    Circuit c = testing::staggered5();
    CompileOptions direct{.strategy = Strategy::Greedy, .use_dual = false};
    CompileOptions both{.strategy = Strategy::Greedy, .use_dual = true};
    OrderResult d = compile_order(c, direct);
    OrderResult b = compile_order(c, both);
    EXPECT_EQ(d.width(), 4u);
    EXPECT_FALSE(d.via_dual);
    EXPECT_EQ(b.width(), 3u);
    EXPECT_TRUE(b.via_dual);
    EXPECT_EQ(b.width(), width_of_order(cones_of(dual(c)), b.order.order));
}

TEST(CompileOrder, SymmetricBrickworkKeepsDirect) {
    for (uint32_t k = 1; k <= 2; k++) {
        Circuit c = brickwork_1d(4 * k + 4, k, true);
        OrderResult direct = compile_order(c, {.use_dual = false});
        OrderResult r = compile_order(c);
        EXPECT_EQ(r.width(), 4 * k);
        EXPECT_EQ(direct.width(), r.width());
        EXPECT_FALSE(r.via_dual);
    }
}

TEST(CompileOrder, ExactIsSelfDual) {
    for (uint64_t seed = 0; seed < 40; seed++) {
        Circuit c = testing::random_small(seed, 7);
        size_t direct = compile_order(c, {.strategy = Strategy::Exact, .use_dual = false}).width();
        size_t flipped = compile_order(dual(c), {.strategy = Strategy::Exact, .use_dual = false}).width();
        size_t both = compile_order(c, {.strategy = Strategy::Exact, .use_dual = true}).width();
        EXPECT_EQ(direct, flipped) << "seed " << seed;
        EXPECT_EQ(direct, both) << "seed " << seed;
    }
}

}  // namespace
}  // namespace qreuse
