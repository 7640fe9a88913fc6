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

#include "oracles.hpp"
#include "walkforge/graphs.hpp"

using namespace walkforge;
using namespace walkforge::graphs;
using numerics::ComplexMatrix;
using numerics::max_abs_diff;

namespace {

// Every topology the toolkit supports with at most 16 nodes.
std::vector<Topology> small_topologies() {
    std::vector<Topology> ts;
    ts.push_back(Line{4});
    ts.push_back(Line{8});
    ts.push_back(Line{16});
    for (int k = 3; k <= 16; k++) {
        ts.push_back(Cycle{k});
    }
    ts.push_back(Hypercube{1, 1});
    ts.push_back(Hypercube{2, 2});
    ts.push_back(Hypercube{3, 1});
    ts.push_back(Hypercube{4, 0});
    ts.push_back(Hypercube{3, 5});
    ts.push_back(Complete{2});
    ts.push_back(Complete{4});
    ts.push_back(Complete{8});
    ts.push_back(Complete{16});
    return ts;
}

} // namespace

TEST_SUITE_BEGIN("graphs");

TEST_CASE("adjacency of the complete graph is all ones") {
    ComplexMatrix a = adjacency(Complete{4});
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            CHECK(a.at(r, c) == numerics::Complex{1.0});
        }
    }
}

TEST_CASE("adjacency of the 1-cube is a single edge") {
    ComplexMatrix a = adjacency(Hypercube{1, 0});
    CHECK(a.at(0, 1) == numerics::Complex{1.0});
    CHECK(a.at(1, 0) == numerics::Complex{1.0});
    CHECK(a.at(0, 0) == numerics::Complex{});
    CHECK(a.at(1, 1) == numerics::Complex{});
}

TEST_CASE("embedded 5-cycle adjacency has zero padding rows") {
    ComplexMatrix a = adjacency(Cycle{5});
    REQUIRE(a.rows() == 8);
    for (int v = 0; v < 5; v++) {
        CHECK(a.at(v, (v + 1) % 5) == numerics::Complex{1.0});
        CHECK(a.at((v + 1) % 5, v) == numerics::Complex{1.0});
    }
    for (int v = 5; v < 8; v++) {
        for (int u = 0; u < 8; u++) {
            CHECK(a.at(v, u) == numerics::Complex{});
            CHECK(a.at(u, v) == numerics::Complex{});
        }
    }
}

TEST_CASE("line adjacency is the path matrix") {
    ComplexMatrix a = adjacency(Line{8});
    CHECK(a.at(0, 7) == numerics::Complex{});
    CHECK(a.at(7, 0) == numerics::Complex{});
    for (int v = 0; v < 7; v++) {
        CHECK(a.at(v, v + 1) == numerics::Complex{1.0});
    }
}

TEST_CASE("hypercube self-loops sit on the diagonal") {
    ComplexMatrix a = adjacency(Hypercube{3, 1});
    for (int v = 0; v < 8; v++) {
        CHECK(a.at(v, v) == numerics::Complex{1.0});
    }
}

TEST_CASE("invalid topologies are rejected") {
    CHECK_THROWS_AS(validate(Topology{Line{3}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Topology{Cycle{2}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Topology{Hypercube{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Topology{Complete{3}}), std::invalid_argument);
    CHECK_THROWS_AS(adjacency(Topology{Complete{6}}), std::invalid_argument);
}

TEST_CASE("complete-graph shunts are xor masks") {
    ShuntDecomposition d = shunt_decompose(Complete{8});
    REQUIRE(d.shunts.size() == 8);
    for (int v = 0; v < 8; v++) {
        CHECK(d.shunts[3].map[v] == (v ^ 3));
    }
}

TEST_CASE("cycle-4 shunts are increment and decrement") {
    ShuntDecomposition d = shunt_decompose(Cycle{4});
    REQUIRE(d.shunts.size() == 2);
    CHECK(d.shunts[0].map == std::vector<int>{1, 2, 3, 0});
    CHECK(d.shunts[1].map == std::vector<int>{3, 0, 1, 2});
}

TEST_CASE("embedded 5-cycle increment fixes the padding states") {
    ShuntDecomposition d = shunt_decompose(Cycle{5});
    CHECK(d.shunts[0].map == std::vector<int>{1, 2, 3, 4, 0, 5, 6, 7});
    CHECK(d.shunts[1].map == std::vector<int>{4, 0, 1, 2, 3, 5, 6, 7});
}

TEST_CASE("hypercube shunts flip one bit per coin value") {
    ShuntDecomposition d = shunt_decompose(Hypercube{3, 1});
    REQUIRE(d.shunts.size() == 4);
    for (int i = 0; i < 3; i++) {
        for (int v = 0; v < 8; v++) {
            CHECK(d.shunts[i].map[v] == (v ^ (1 << i)));
        }
    }
    for (int v = 0; v < 8; v++) {
        CHECK(d.shunts[3].map[v] == v);
    }
}

TEST_CASE("validate_decomposition on matching and mismatched graphs") {
    CHECK(validate_decomposition(shunt_decompose(Complete{4}), adjacency(Complete{4})));
    CHECK(validate_decomposition(shunt_decompose(Cycle{8}), adjacency(Cycle{8})));
    CHECK_FALSE(validate_decomposition(shunt_decompose(Cycle{8}), adjacency(Complete{8})));
    CHECK_THROWS_AS(validate_decomposition(shunt_decompose(Cycle{8}), adjacency(Complete{4})),
                    std::invalid_argument);
}

TEST_CASE("every decomposition reconstructs its augmented adjacency") {
    for (const auto &t : small_topologies()) {
        CAPTURE(describe(t));
        CHECK(validate_decomposition(shunt_decompose(t), augmented_adjacency(t)));
    }
}

TEST_CASE("embedded cycles differ from their augmented graph only at padding") {
    ComplexMatrix plain = adjacency(Cycle{5});
    ComplexMatrix augmented = augmented_adjacency(Cycle{5});
    for (int v = 5; v < 8; v++) {
        CHECK(augmented.at(v, v) == numerics::Complex{2.0});
    }
    for (int r = 0; r < 5; r++) {
        for (int c = 0; c < 8; c++) {
            CHECK(plain.at(r, c) == augmented.at(r, c));
        }
    }
}

TEST_CASE("all shunts are bijections") {
    for (const auto &t : small_topologies()) {
        CAPTURE(describe(t));
        for (const auto &s : shunt_decompose(t).shunts) {
            CHECK(s.is_permutation());
        }
    }
}

TEST_CASE("shift matrices are unitary permutation matrices") {
    for (const auto &t : small_topologies()) {
        CAPTURE(describe(t));
        ComplexMatrix s = shift_matrix(shunt_decompose(t));
        CHECK_FALSE(oracle::perm_of_matrix(s).empty());
        CHECK(numerics::is_unitary(s, 1e-12));
    }
}

TEST_CASE("hypercube shunts are pairwise disjoint") {
    for (const auto &t : {Topology{Hypercube{4, 0}}, Topology{Hypercube{3, 1}}}) {
        auto d = shunt_decompose(t);
        for (std::size_t i = 0; i < d.shunts.size(); i++) {
            for (std::size_t j = i + 1; j < d.shunts.size(); j++) {
                const auto &a = d.shunts[i].map;
                const auto &b = d.shunts[j].map;
                for (int v = 0; v < d.dim; v++) {
                    if (a[v] != v && b[v] != v) {
                        CHECK(a[v] != b[v]);
                    }
                }
            }
        }
    }
}

TEST_CASE("cycle-4 shift matches the two-block form assembled directly") {
    ComplexMatrix expect = oracle::block_diag_perm_matrix(
        {oracle::k_increment(4, 4), oracle::k_decrement(4, 4)});
    CHECK(max_abs_diff(shift_matrix(shunt_decompose(Cycle{4})), expect) == 0.0);

    // Same comparison routed through direct_sum on the shunt matrices.
    auto d = shunt_decompose(Cycle{4});
    std::vector<ComplexMatrix> blocks{d.shunts[0].matrix(), d.shunts[1].matrix()};
    CHECK(max_abs_diff(numerics::direct_sum(blocks), expect) == 0.0);
}

TEST_CASE("complete-2 shift is a CNOT") {
    ComplexMatrix s = shift_matrix(shunt_decompose(Complete{2}));
    ComplexMatrix expect(4, 4);
    expect.at(0, 0) = 1.0;
    expect.at(1, 1) = 1.0;
    expect.at(2, 3) = 1.0;
    expect.at(3, 2) = 1.0;
    CHECK(max_abs_diff(s, expect) == 0.0);
}

TEST_CASE("embedded 5-cycle shift realizes the expected transitions") {
    ComplexMatrix s = shift_matrix(shunt_decompose(Cycle{5}));
    oracle::Perm p = oracle::perm_of_matrix(s);
    REQUIRE(p.size() == 16);
    // Coin 0: forward around the 5-cycle; coin 1: backward; 5..7 fixed.
    for (int v = 0; v < 5; v++) {
        CHECK(p[v] == (v + 1) % 5);
        CHECK(p[8 + v] == 8 + (v + 4) % 5);
    }
    for (int v = 5; v < 8; v++) {
        CHECK(p[v] == v);
        CHECK(p[8 + v] == 8 + v);
    }
}

TEST_SUITE_END();
