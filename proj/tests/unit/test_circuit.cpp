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

#include "qreuse/circuit.hpp"
#include "qreuse/errors.hpp"
#include "qreuse/unitary.hpp"
#include "test_util.hpp"

namespace qreuse {
namespace {

using testing::bell;
using testing::chain3;

std::vector<std::string> rules(const Circuit &c) {
    std::vector<std::string> out;
    for (const Violation &v : validate(c)) {
        out.push_back(v.rule);
    }
    return out;
}

TEST(Validate, BellIsClean) { EXPECT_TRUE(validate(bell()).empty()); }

TEST(Validate, GateOnUnpreparedQubit) {
    Circuit c(2, 1);
    c.prepare(0).gate("cx", {0, 1}).measure(0, 0);
    auto v = validate(c);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].rule, "unprepared");
    EXPECT_EQ(v[0].op_index, 1u);
}

TEST(Validate, TwoMeasuresOnOneClbit) {
    Circuit c(2, 1);
    c.prepare(0).prepare(1).measure(0, 0).measure(1, 0);
    auto v = validate(c);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].rule, "clbit-rewritten");
    EXPECT_EQ(v[0].op_index, 3u);
}

TEST(Validate, StructuralRules) {
    Circuit dup(2, 0);
    dup.prepare(0).prepare(1).gate("cx", {1, 1});
    EXPECT_EQ(rules(dup), std::vector<std::string>{"duplicate-qubit"});

    Circuit range(1, 0);
    range.prepare(0).gate("h", {3});
    EXPECT_EQ(rules(range), std::vector<std::string>{"qubit-range"});

    Circuit shape(1, 0);
    shape.prepare(0).gate("u", {0}, {}, Matrix::identity(4));
    EXPECT_EQ(rules(shape), std::vector<std::string>{"matrix-shape"});

    Matrix bad = Matrix::identity(2);
    bad(0, 0) = 2.0;
    Circuit nonunitary(1, 0);
    nonunitary.prepare(0).gate("u", {0}, {}, bad);
    EXPECT_EQ(rules(nonunitary), std::vector<std::string>{"matrix-unitary"});

    Circuit after(1, 1);
    after.prepare(0).measure(0, 0).gate("h", {0});
    EXPECT_EQ(rules(after), std::vector<std::string>{"after-measure"});

    Circuit twice(1, 0);
    twice.prepare(0).prepare(0);
    EXPECT_EQ(rules(twice), std::vector<std::string>{"double-prepare"});

    Circuit unwritten(1, 2);
    unwritten.prepare(0).measure(0, 0);
    EXPECT_EQ(rules(unwritten), std::vector<std::string>{"clbit-unwritten"});

    Circuit clrange(1, 1);
    clrange.prepare(0).measure(0, 4);
    EXPECT_FALSE(validate(clrange).empty());
}

TEST(Validate, ReuseAfterResetIsValid) {
    Circuit c(1, 2);
    c.prepare(0).gate("x", {0}).measure(0, 0).reset(0).gate("h", {0}).measure(0, 1);
    EXPECT_TRUE(validate(c).empty());
    EXPECT_FALSE(is_measurement_terminated(c));
    EXPECT_THROW(require_valid(Circuit(1, 1)), InvalidCircuit);
}

TEST(Dual, ChainReversesAndAdjoints) {
    Circuit c = chain3();
    Circuit d = dual(c);
    ASSERT_EQ(d.ops.size(), 8u);
    for (int i = 0; i < 3; i++) {
        EXPECT_EQ(d.ops[i].kind, OpKind::Prepare);
        EXPECT_EQ(d.ops[5 + i].kind, OpKind::Measure);
    }
    EXPECT_EQ(d.ops[3].label, "g2†");
    EXPECT_EQ(d.ops[3].qubits, (std::vector<QubitId>{1, 2}));
    EXPECT_EQ(d.ops[4].label, "g1†");
    EXPECT_EQ(d.ops[4].qubits, (std::vector<QubitId>{0, 1}));
    EXPECT_LT(d.ops[4].matrix->max_abs_diff(c.ops[3].matrix->adjoint()), 1e-15);
    EXPECT_TRUE(validate(d).empty());
}

void expect_same_content(const Circuit &a, const Circuit &b) {
    ASSERT_EQ(a.ops.size(), b.ops.size());
    ASSERT_EQ(a.num_qubits, b.num_qubits);
    ASSERT_EQ(a.num_clbits, b.num_clbits);
    for (size_t i = 0; i < a.ops.size(); i++) {
        EXPECT_EQ(a.ops[i].kind, b.ops[i].kind) << "op " << i;
        EXPECT_EQ(a.ops[i].qubits, b.ops[i].qubits) << "op " << i;
        EXPECT_EQ(a.ops[i].label, b.ops[i].label) << "op " << i;
        EXPECT_EQ(a.ops[i].params, b.ops[i].params) << "op " << i;
        ASSERT_EQ(a.ops[i].matrix.has_value(), b.ops[i].matrix.has_value());
        if (a.ops[i].matrix) {
            EXPECT_LT(a.ops[i].matrix->max_abs_diff(*b.ops[i].matrix), 1e-12);
        }
    }
}

TEST(Dual, InvolutionOnRandomCircuits) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        Circuit c = testing::random_small(seed);
        Circuit dd = dual(dual(c));
        expect_same_content(c, dd);
    }
}

std::vector<std::string> gate_labels(const Circuit &c) {
    std::vector<std::string> out;
    for (const Operation &op : c.ops) {
        if (op.is_gate()) {
            out.push_back(op.label);
        }
    }
    return out;
}

// A Reset on a measured wire is a plain Prepare, so the double dual is the
// original with such resets spelled as Prepare.
TEST(Dual, InvolutionWithResetOnMeasuredWire) {
    Circuit c(2, 3);
    c.prepare(0).prepare(1).gate("h", {0}).gate("cx", {0, 1}).measure(0, 0).reset(0).gate("cx", {1, 0});
    c.measure(1, 1).measure(0, 2);
    Circuit d = dual(c);
    EXPECT_TRUE(validate(d).empty());
    EXPECT_EQ(d.count(OpKind::Reset), 0u);
    Circuit expected = c;
    expected.ops[5] = Operation::prepare(0);
    expect_same_content(dual(d), expected);
}

// A Reset on a live wire discards that wire; the dual records the discarded
// lifetime as a fresh measurement.
TEST(Dual, ResetOnLiveWire) {
    Circuit c(2, 2);
    c.prepare(0).prepare(1).gate("h", {0}).gate("cx", {0, 1}).measure(0, 0).reset(1).gate("h", {1});
    c.measure(1, 1);
    Circuit d = dual(c);
    EXPECT_TRUE(validate(d).empty());
    EXPECT_EQ(d.count(OpKind::Measure), 3u);
    EXPECT_EQ(d.count(OpKind::Prepare), 3u);
    Circuit dd = dual(d);
    EXPECT_TRUE(validate(dd).empty());
    EXPECT_EQ(gate_labels(dd), gate_labels(c));
    EXPECT_EQ(dd.count(OpKind::Measure), 3u);
}

TEST(Dual, CountsExchange) {
    std::vector<Circuit> cases{chain3(), bell(), testing::staggered5()};
    for (uint64_t seed = 0; seed < 20; seed++) {
        cases.push_back(testing::random_small(seed));
    }
    for (const Circuit &c : cases) {
        Circuit d = dual(c);
        EXPECT_EQ(d.count(OpKind::Prepare), c.count(OpKind::Measure));
        EXPECT_EQ(d.count(OpKind::Measure), c.count(OpKind::Prepare));
        EXPECT_EQ(d.gate_count(), c.gate_count());
    }
    Circuit with_reset(1, 2);
    with_reset.prepare(0).gate("h", {0}).measure(0, 0).reset(0).gate("x", {0}).measure(0, 1);
    Circuit d = dual(with_reset);
    EXPECT_EQ(d.count(OpKind::Prepare), 2u);
    EXPECT_EQ(d.count(OpKind::Measure), 2u);
}

TEST(Dual, StaggeredExchangesPrepsAndMeasures) {
    Circuit c = testing::staggered5();
    Circuit d = dual(c);
    // Measurement of qubit 4 is the first to happen in C, so its preparation
    // is the last in the dual; the opposite holds for qubit 3.
    std::vector<QubitId> c_measure, d_prepare;
    for (const Operation &op : c.ops) {
        if (op.kind == OpKind::Measure) {
            c_measure.push_back(op.qubit());
        }
    }
    for (const Operation &op : d.ops) {
        if (op.kind == OpKind::Prepare) {
            d_prepare.push_back(op.qubit());
        }
    }
    std::reverse(c_measure.begin(), c_measure.end());
    EXPECT_EQ(c_measure, d_prepare);
}

TEST(Dual, TracedQubitGetsPreparation) {
    Circuit c = bernstein_vazirani(3, "101");
    Circuit d = dual(c);
    EXPECT_TRUE(validate(d).empty());
    EXPECT_EQ(d.count(OpKind::Prepare), 4u);
    EXPECT_EQ(d.count(OpKind::Measure), 4u);
}

TEST(Dual, RejectsInvalid) { EXPECT_THROW(dual(Circuit(1, 1)), InvalidCircuit); }

TEST(Unitary, StandardGates) {
    double theta = 0.7;
    Matrix rzz = *standard_gate_matrix("rzz", std::vector<double>{theta}, 2);
    Complex a = std::exp(Complex(0, -theta / 2)), b = std::exp(Complex(0, theta / 2));
    EXPECT_LT(std::abs(rzz(0, 0) - a), 1e-15);
    EXPECT_LT(std::abs(rzz(1, 1) - b), 1e-15);
    EXPECT_LT(std::abs(rzz(2, 2) - b), 1e-15);
    EXPECT_LT(std::abs(rzz(3, 3) - a), 1e-15);
    Matrix cx = *standard_gate_matrix("cx", {}, 2);
    EXPECT_EQ(cx(3, 2), Complex(1));
    EXPECT_EQ(cx(2, 2), Complex(0));
    EXPECT_FALSE(standard_gate_matrix("u3", {}, 1));
    EXPECT_FALSE(standard_gate_matrix("h", {}, 2));
    Matrix s = *standard_gate_matrix("s", {}, 1);
    Matrix sdg = *standard_gate_matrix("s†", {}, 1);
    EXPECT_LT((s * sdg).max_abs_diff(Matrix::identity(2)), 1e-15);
    EXPECT_EQ(adjoint_label("g"), "g†");
    EXPECT_EQ(adjoint_label("g†"), "g");
}

TEST(Unitary, HaarAndDft) {
    for (size_t dim : {2u, 4u, 8u, 16u}) {
        Matrix u = haar_unitary(dim, 42);
        EXPECT_TRUE(u.is_unitary(1e-12));
        EXPECT_EQ(u, haar_unitary(dim, 42));
        EXPECT_NE(u, haar_unitary(dim, 43));
        EXPECT_TRUE(dft_matrix(dim).is_unitary(1e-12));
    }
}

}  // namespace
}  // namespace qreuse
