// Copyright 2026 The walkforge Authors
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

#include <doctest.h>

#include "walkforge/builders.hpp"
#include "walkforge/serialize.hpp"

using namespace walkforge;
using namespace walkforge::ir;
using numerics::max_abs_diff;

namespace {

std::vector<Circuit> roster() {
    using namespace builders;
    std::vector<Circuit> cs;
    cs.push_back(build_cycle_shift(2, CycleVariant::FullControlled));
    cs.push_back(build_cycle_shift(3, CycleVariant::JReducedNna));
    cs.push_back(build_cycle_shift(3, CycleVariant::JReducedLra));
    cs.push_back(build_cycle_shift(4, CycleVariant::FullControlled));
    cs.push_back(build_k_cycle_shift(5));
    cs.push_back(build_k_cycle_shift(11));
    cs.push_back(build_hypercube_shift(3, 1, HypercubeOrdering::Gray));
    cs.push_back(build_hypercube_shift(4, 0, HypercubeOrdering::Binary));
    cs.push_back(build_complete_shift(2, CompleteModel::Cnot));
    cs.push_back(build_complete_shift(3, CompleteModel::Swap));
    return cs;
}

} // namespace

TEST_SUITE_BEGIN("serialize");

TEST_CASE("text output of the complete-graph CNOT circuit") {
    std::string text =
        to_text(builders::build_complete_shift(2, builders::CompleteModel::Cnot));
    CHECK(text == "qubits position=2 coin=2\n"
                  "CX q2 -> q0\n"
                  "CX q3 -> q1\n");
}

TEST_CASE("text round trip preserves gates exactly") {
    Circuit c{2, 1, {}};
    c.append(XGate{0});
    c.append(HGate{2});
    c.append(SwapGate{0, 1});
    c.append(MCXGate{{{0, Polarity::Positive}, {2, Polarity::Negative}}, 1});
    c.append(MCSwapGate{{{2, Polarity::Negative}}, 0, 1});
    Circuit back = from_text(to_text(c));
    CHECK(back.position_qubits == 2);
    CHECK(back.coin_qubits == 1);
    REQUIRE(back.gates.size() == c.gates.size());
    CHECK(max_abs_diff(compile(back), compile(c)) == 0.0);
}

TEST_CASE("text parser reports malformed input") {
    CHECK_THROWS_AS(from_text("X -> q0\n"), std::runtime_error);
    CHECK_THROWS_AS(from_text("qubits position=1 coin=0\nY -> q0\n"), std::runtime_error);
    CHECK_THROWS_AS(from_text("qubits position=2 coin=0\nCX -q1 -> q0\n"), std::runtime_error);
    CHECK_THROWS_AS(from_text("qubits position=1 coin=0\nX q0\n"), std::runtime_error);
    CHECK_THROWS_AS(from_text("qubits position=1 coin=0\nX -> q4\n"), std::invalid_argument);
}

TEST_CASE("text parser accepts comments and blank lines") {
    Circuit c = from_text("# header comment\n"
                          "qubits position=1 coin=1\n"
                          "\n"
                          "H -> q1   # coin toss\n"
                          "CX q1 -> q0\n");
    CHECK(c.gates.size() == 2);
}

TEST_CASE("unitary blocks are not serializable as text") {
    Circuit c{1, 0, {UnitaryBlockGate{{0}, ComplexMatrix::identity(2)}}};
    CHECK_THROWS_AS(to_text(c), std::invalid_argument);
}

TEST_CASE("qasm export carries the standard header") {
    std::string qasm = to_qasm(builders::build_complete_shift(2, builders::CompleteModel::Swap));
    CHECK(qasm.find("OPENQASM 2.0;") != std::string::npos);
    CHECK(qasm.find("include \"qelib1.inc\";") != std::string::npos);
    CHECK(qasm.find("qreg q[4];") != std::string::npos);
    CHECK(qasm.find("swap q[0],q[2];") != std::string::npos);
}

TEST_CASE("qasm export lowers polarities before emitting") {
    Circuit c{1, 1, {MCXGate{{{1, Polarity::Negative}}, 0}}};
    std::string qasm = to_qasm(c);
    CHECK(qasm.find("x q[1];") != std::string::npos);
    CHECK(qasm.find("cx q[1],q[0];") != std::string::npos);
}

TEST_CASE("round trips reproduce the compiled matrix") {
    for (const auto &c : roster()) {
        CAPTURE(c.position_qubits);
        CAPTURE(c.gates.size());
        Circuit via_text = from_text(to_text(c));
        CHECK(max_abs_diff(compile(via_text), compile(c)) <= 1e-12);
        Circuit via_qasm = from_qasm(to_qasm(c));
        CHECK(via_qasm.position_qubits == c.position_qubits);
        CHECK(via_qasm.coin_qubits == c.coin_qubits);
        CHECK(max_abs_diff(compile(via_qasm), compile(c)) <= 1e-12);
    }
}

TEST_CASE("wide multi-controls survive the recursive qasm expansion") {
    // Four positive controls exercises two recursion levels.
    Circuit c{5, 0, {}};
    c.append(MCXGate{{{1, Polarity::Positive},
                      {2, Polarity::Positive},
                      {3, Polarity::Positive},
                      {4, Polarity::Positive}},
                     0});
    Circuit back = from_qasm(to_qasm(c));
    CHECK(max_abs_diff(compile(back), compile(c)) <= 1e-12);
}

TEST_CASE("qasm parser rejects unknown statements") {
    CHECK_THROWS_AS(from_qasm("OPENQASM 2.0;\nqreg q[1];\nrz(0.4) q[0];\n"), std::runtime_error);
    CHECK_THROWS_AS(from_qasm("OPENQASM 2.0;\nx q[0];\n"), std::runtime_error);
    CHECK_THROWS_AS(from_qasm("OPENQASM 2.0;\nqreg q[oops];\nx q[0];\n"), std::runtime_error);
    CHECK_THROWS_AS(from_text("qubits position=two coin=0\nX -> q0\n"), std::runtime_error);
}

TEST_CASE("qasm without the register comment defaults to position only") {
    Circuit c = from_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nx q[1];\n");
    CHECK(c.position_qubits == 2);
    CHECK(c.coin_qubits == 0);
    CHECK(c.gates.size() == 1);
}

TEST_SUITE_END();
