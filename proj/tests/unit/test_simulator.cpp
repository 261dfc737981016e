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

#include "qreuse/errors.hpp"
#include "qreuse/generators.hpp"
#include "qreuse/pipeline.hpp"
#include "qreuse/simulator.hpp"
#include "test_util.hpp"

namespace qreuse {
namespace {

Distribution dist(uint32_t n, std::map<std::string, double> probs) { return {n, std::move(probs)}; }

TEST(Simulator, Hadamard) {
    Circuit c(1, 1);
    c.prepare(0).gate("h", {0}).measure(0, 0);
    Distribution d = exact_distribution(c);
    EXPECT_NEAR(d.at("0"), 0.5, 1e-15);
    EXPECT_NEAR(d.at("1"), 0.5, 1e-15);
}

TEST(Simulator, Bell) {
    Distribution d = exact_distribution(testing::bell());
    EXPECT_EQ(d.probs.size(), 2u);
    EXPECT_NEAR(d.at("00"), 0.5, 1e-15);
    EXPECT_NEAR(d.at("11"), 0.5, 1e-15);
}

TEST(Simulator, BitOrderFollowsClbits) {
    // X on qubit 0 only, read into clbit 1.
    Circuit c(2, 2);
    c.prepare(0).prepare(1).gate("x", {0}).measure(0, 1).measure(1, 0);
    Distribution d = exact_distribution(c);
    EXPECT_DOUBLE_EQ(d.at("01"), 1.0);
    // cx control is the first listed qubit.
    Circuit e(2, 2);
    e.prepare(0).prepare(1).gate("x", {1}).gate("cx", {1, 0}).measure(0, 0).measure(1, 1);
    EXPECT_DOUBLE_EQ(exact_distribution(e).at("11"), 1.0);
}

TEST(Simulator, BernsteinVazirani) {
    Distribution d = exact_distribution(bernstein_vazirani(5, "10110"));
    ASSERT_EQ(d.probs.size(), 1u);
    EXPECT_NEAR(d.at("10110"), 1.0, 1e-12);
}

TEST(Simulator, MidCircuitResetAndMeasure) {
    Circuit c(2, 3);
    c.prepare(0).prepare(1).gate("h", {0}).gate("cx", {0, 1}).measure(0, 0).reset(0);
    c.gate("cx", {1, 0}).measure(0, 1).measure(1, 2);
    Distribution d = exact_distribution(c);
    EXPECT_EQ(d.probs.size(), 2u);
    EXPECT_NEAR(d.at("000"), 0.5, 1e-15);
    EXPECT_NEAR(d.at("111"), 0.5, 1e-15);

    // A reset wire starts again from |0> regardless of what it held.
    Circuit r(1, 2);
    r.prepare(0).gate("x", {0}).measure(0, 0).reset(0).measure(0, 1);
    EXPECT_DOUBLE_EQ(exact_distribution(r).at("10"), 1.0);
}

TEST(Simulator, NormalizationOverLongCircuits) {
    for (uint64_t seed = 0; seed < 3; seed++) {
        Distribution d = exact_distribution(random_circuit(8, 200, seed));
        EXPECT_NEAR(d.total(), 1.0, 1e-12);
    }
    Compilation out = compile(random_circuit(10, 60, 4));
    EXPECT_NEAR(exact_distribution(out.compiled.circuit).total(), 1.0, 1e-12);
}

TEST(Simulator, MatchesDenseReference) {
    for (uint64_t seed = 0; seed < 40; seed++) {
        Circuit c = testing::random_small(seed);
        Distribution d = exact_distribution(c);
        EXPECT_LT(testing::brute_tvd(d.probs, testing::brute_distribution(c)), 1e-12) << "seed " << seed;
    }
    Circuit q = generate({.family = Family::Qaoa, .N = 8, .p = 2, .seed = 1});
    EXPECT_LT(testing::brute_tvd(exact_distribution(q).probs, testing::brute_distribution(q)), 1e-12);
}

TEST(Simulator, Limits) {
    Circuit wide(15, 15);
    for (QubitId q = 0; q < 15; q++) {
        wide.prepare(q).measure(q, q);
    }
    EXPECT_THROW(exact_distribution(wide), OracleLimitExceeded);
    EXPECT_NO_THROW(exact_distribution(wide, {.max_qubits = 15}));

    Circuit big_gate(5, 5);
    for (QubitId q = 0; q < 5; q++) {
        big_gate.prepare(q);
    }
    big_gate.gate("id5", {0, 1, 2, 3, 4}, {}, Matrix::identity(32));
    for (QubitId q = 0; q < 5; q++) {
        big_gate.measure(q, q);
    }
    EXPECT_THROW(exact_distribution(big_gate), OracleLimitExceeded);

    Circuit unknown(1, 1);
    unknown.prepare(0).gate("mystery", {0}).measure(0, 0);
    EXPECT_THROW(exact_distribution(unknown), UnsupportedInput);
}

TEST(Simulator, GhzKeepsTwoBranches) {
    const uint32_t n = 12;
    Circuit c(n, n);
    for (QubitId q = 0; q < n; q++) {
        c.prepare(q);
    }
    c.gate("h", {0});
    for (QubitId q = 1; q < n; q++) {
        c.gate("cx", {q - 1, q});
    }
    for (QubitId q = 0; q < n; q++) {
        c.measure(q, q);
    }
    Distribution d = exact_distribution(c);
    EXPECT_EQ(d.probs.size(), 2u);
    EXPECT_NEAR(d.at(std::string(n, '1')), 0.5, 1e-12);
}

TEST(Tvd, Examples) {
    EXPECT_DOUBLE_EQ(tvd(dist(1, {{"0", 1.0}}), dist(1, {{"1", 1.0}})), 1.0);
    EXPECT_DOUBLE_EQ(tvd(dist(2, {{"00", 0.5}, {"11", 0.5}}), dist(2, {{"00", 1.0}})), 0.5);
    EXPECT_DOUBLE_EQ(tvd(dist(2, {{"01", 0.25}, {"10", 0.75}}), dist(2, {{"10", 0.75}, {"01", 0.25}})), 0.0);
    EXPECT_THROW(tvd(dist(1, {}), dist(2, {})), std::invalid_argument);
}

TEST(Tvd, PermuteBits) {
    Distribution d = permute_bits(dist(3, {{"100", 0.25}, {"110", 0.75}}), {2, 0, 1});
    EXPECT_DOUBLE_EQ(d.at("001"), 0.25);
    EXPECT_DOUBLE_EQ(d.at("101"), 0.75);
    EXPECT_THROW(permute_bits(d, {0, 1}), std::invalid_argument);
}

TEST(Equivalence, DetectsDifferences) {
    Circuit a = testing::bell();
    Circuit b(2, 2);
    b.prepare(0).prepare(1).gate("h", {0}).measure(0, 0).measure(1, 1);
    std::map<QubitId, ClbitId> id{{0, 0}, {1, 1}};
    EquivalenceReport same = verify_equivalence(a, a, id, 1e-9);
    EXPECT_TRUE(same.pass);
    EXPECT_EQ(same.tvd, 0.0);
    EquivalenceReport diff = verify_equivalence(a, b, id, 1e-9);
    EXPECT_FALSE(diff.pass);
    EXPECT_NEAR(diff.tvd, 0.5, 1e-12);
    EXPECT_THROW(verify_equivalence(a, a, {{0, 0}}, 1e-9), std::invalid_argument);
    EXPECT_THROW(verify_equivalence(a, a, {{0, 0}, {1, 0}}, 1e-9), std::invalid_argument);
}

TEST(Equivalence, ClbitMapIsApplied) {
    Circuit a(2, 2);
    a.prepare(0).prepare(1).gate("x", {1}).measure(0, 0).measure(1, 1);
    Circuit b(2, 2);
    b.prepare(0).prepare(1).gate("x", {1}).measure(1, 0).measure(0, 1);
    EXPECT_FALSE(verify_equivalence(a, b, {{0, 0}, {1, 1}}, 1e-9).pass);
    EXPECT_TRUE(verify_equivalence(a, b, {{0, 1}, {1, 0}}, 1e-9).pass);
}

TEST(Cut, Values) {
    Graph k4 = complete_graph(4);
    EXPECT_DOUBLE_EQ(cut_value(k4, "0000"), 0.0);
    EXPECT_DOUBLE_EQ(cut_value(k4, "0011"), 4.0);
    EXPECT_DOUBLE_EQ(cut_value(k4, "0111"), 3.0);
    EXPECT_THROW(cut_value(k4, "001"), std::invalid_argument);
    Graph path = make_graph(3, {{1, 0}, {1, 2}});
    EXPECT_DOUBLE_EQ(cut_value(path, "010"), 2.0);
    EXPECT_DOUBLE_EQ(cut_value(path, "011"), 1.0);
}

TEST(Cut, ExpectedCutAtZeroAngles) {
    Graph k4 = complete_graph(4);
    Distribution d = exact_distribution(qaoa_maxcut(k4, {0.0}, {0.0}));
    EXPECT_NEAR(expected_cut(d, k4), 3.0, 1e-12);
    EXPECT_DOUBLE_EQ(expected_cut(dist(4, {{"0011", 1.0}}), k4), 4.0);
}

TEST(Cut, CompiledQaoaKeepsExpectation) {
    Graph k4 = complete_graph(4);
    Circuit c = qaoa_maxcut(k4, {0.4, 0.2}, {0.9, 0.5});
    Compilation out = compile(c);
    Distribution a = exact_distribution(c);
    Distribution b = exact_distribution(out.compiled.circuit);
    std::vector<ClbitId> perm(4);
    for (auto [q, cb] : out.compiled.clbit_map) {
        perm[cb] = q;
    }
    EXPECT_NEAR(expected_cut(a, k4), expected_cut(permute_bits(b, perm), k4), 1e-12);
}

}  // namespace
}  // namespace qreuse
