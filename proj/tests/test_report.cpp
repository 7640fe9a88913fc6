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

#include <cstdlib>

#include <json.hpp>

#include "walkforge/report.hpp"

using namespace walkforge;
using namespace walkforge::report;
using nlohmann::json;

TEST_SUITE_BEGIN("report");

TEST_CASE("resolve fills topology defaults") {
    TopologyRequest req;
    req.topology = "cycle";
    req.k = 5;
    ResolvedConfig rc = resolve(req);
    CHECK(rc.options.cycle_variant == builders::CycleVariant::TranspositionK);
    CHECK(rc.coin == walk::CoinKind::Hadamard);

    req.k = 8;
    rc = resolve(req);
    CHECK(rc.options.cycle_variant == builders::CycleVariant::JReducedLra);

    TopologyRequest cube;
    cube.topology = "hypercube";
    cube.dim = 3;
    cube.loops = 1;
    rc = resolve(cube);
    CHECK(rc.options.hypercube_ordering == builders::HypercubeOrdering::Gray);
    CHECK(rc.coin == walk::CoinKind::Grover);

    TopologyRequest complete;
    complete.topology = "complete";
    complete.m = 2;
    rc = resolve(complete);
    CHECK(rc.options.complete_model == builders::CompleteModel::Cnot);
    CHECK(std::get<graphs::Complete>(rc.topology).nodes == 4);
}

TEST_CASE("resolve rejects inconsistent flags") {
    TopologyRequest req;
    req.topology = "cycle";
    req.k = 5;
    req.variant = "j_reduced_lra";
    CHECK_THROWS_AS(resolve(req), UsageError);

    TopologyRequest missing;
    CHECK_THROWS_AS(resolve(missing), UsageError);

    TopologyRequest unknown;
    unknown.topology = "torus";
    CHECK_THROWS_AS(resolve(unknown), UsageError);

    TopologyRequest badsize;
    badsize.topology = "line";
    badsize.nodes = 6;
    CHECK_THROWS_AS(resolve(badsize), UsageError);
}

TEST_CASE("full-register labels are fixed-width bitstrings") {
    CHECK(format_label(3, walk::View::FullRegister, 4) == "0011");
    CHECK(format_label(0, walk::View::FullRegister, 4) == "0000");
    CHECK(format_label(9, walk::View::FullRegister, 4) == "1001");
    CHECK(format_label(-3, walk::View::Position, 4) == "-3");
}

TEST_CASE("walk json carries the frozen schema") {
    // Identity coin keeps every probability exactly 0 or 1.
    walk::WalkConfig cfg = walk::make_config(graphs::Cycle{5}, walk::CoinKind::Identity, 2, 0, 0,
                                             {builders::CycleVariant::TranspositionK,
                                              builders::HypercubeOrdering::Gray,
                                              builders::CompleteModel::Cnot});
    walk::WalkResult result = walk::run_walk(cfg);
    json j = json::parse(walk_json(cfg, result, walk::View::Position, std::nullopt));
    json expect = json::parse(R"({
      "coin": "identity",
      "labels": [0, 1, 2, 3, 4, 5, 6, 7],
      "probs_per_step": [
        [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]
      ],
      "steps": 2,
      "topology": "cycle-5"
    })");
    CHECK(j == expect);
}

TEST_CASE("walk csv carries the frozen layout") {
    walk::WalkConfig cfg = walk::make_config(graphs::Complete{2}, walk::CoinKind::Identity, 1);
    walk::WalkResult result = walk::run_walk(cfg);
    CHECK(walk_csv(cfg, result, walk::View::Position) == "step,label,prob\n"
                                                         "0,0,1\n"
                                                         "0,1,0\n"
                                                         "1,0,1\n"
                                                         "1,1,0\n");
}

TEST_CASE("json probabilities sum to one per step") {
    walk::WalkConfig cfg = walk::make_config(graphs::Line{8}, walk::CoinKind::Hadamard, 4);
    walk::WalkResult result = walk::run_walk(cfg);
    json j = json::parse(walk_json(cfg, result, walk::View::Position, std::nullopt));
    // Lines label positions as signed two's-complement integers.
    CHECK(j["labels"] == json({0, 1, 2, 3, -4, -3, -2, -1}));
    REQUIRE(j["probs_per_step"].size() == 5);
    for (const auto &step : j["probs_per_step"]) {
        double sum = 0.0;
        for (const auto &p : step) {
            sum += p.get<double>();
        }
        CHECK(std::abs(sum - 1.0) <= 1e-9);
    }
}

TEST_CASE("sampled shots are reproducible post-processing") {
    walk::WalkConfig cfg = walk::make_config(graphs::Cycle{4}, walk::CoinKind::Hadamard, 2);
    walk::WalkResult result = walk::run_walk(cfg);
    std::string a = walk_json(cfg, result, walk::View::Position, ShotsSpec{128, 7});
    std::string b = walk_json(cfg, result, walk::View::Position, ShotsSpec{128, 7});
    CHECK(a == b);
    json j = json::parse(a);
    int total = 0;
    for (const auto &[label, count] : j["sampled"]["counts"].items()) {
        total += count.get<int>();
    }
    CHECK(total == 128);
}

TEST_CASE("compare passes against the analytical oracle") {
    walk::WalkConfig cfg = walk::make_config(graphs::Cycle{5}, walk::CoinKind::Hadamard, 3, 0, 0,
                                             {builders::CycleVariant::TranspositionK,
                                              builders::HypercubeOrdering::Gray,
                                              builders::CompleteModel::Cnot});
    CompareOutcome outcome = run_compare(cfg, std::nullopt, 1e-10);
    CHECK(outcome.pass);
    CHECK(outcome.max_l1 < 1e-10);
    REQUIRE(outcome.l1_per_step.size() == 4);
    for (double l1 : outcome.l1_per_step) {
        CHECK(l1 >= 0.0);
        CHECK(l1 <= 1.0);
    }
    REQUIRE(outcome.per_step.size() == 4);
    for (const auto &d : outcome.per_step) {
        double sum = 0.0;
        for (double p : d.probs) {
            sum += p;
        }
        CHECK(std::abs(sum - 1.0) <= 1e-10);
    }
    json j = json::parse(outcome.json(cfg));
    CHECK(j["probs_per_step"].size() == 4);
    CHECK(j["variant"] == "transposition_k");
}

TEST_CASE("compare crosses reflection arrangements on the 8-line") {
    builders::BuilderOptions nna;
    nna.cycle_variant = builders::CycleVariant::JReducedNna;
    builders::BuilderOptions lra;
    lra.cycle_variant = builders::CycleVariant::JReducedLra;
    walk::WalkConfig a = walk::make_config(graphs::Line{8}, walk::CoinKind::Hadamard, 3, 0, 0, nna);
    walk::WalkConfig b = walk::make_config(graphs::Line{8}, walk::CoinKind::Hadamard, 3, 0, 0, lra);
    CompareOutcome outcome = run_compare(a, b, 1e-10);
    CHECK(outcome.pass);
}

TEST_CASE("compare flags deliberately mismatched topologies") {
    walk::WalkConfig a = walk::make_config(graphs::Cycle{4}, walk::CoinKind::Hadamard, 2);
    walk::WalkConfig b = walk::make_config(graphs::Complete{4}, walk::CoinKind::Hadamard, 2);
    CompareOutcome outcome = run_compare(a, b, 1e-10);
    CHECK_FALSE(outcome.pass);
    CHECK(outcome.max_l1 > 1e-10);
}

TEST_CASE("tolerance honors the environment override") {
    unsetenv("WALKFORGE_TOL");
    CHECK(default_tolerance() == doctest::Approx(1e-10));
    setenv("WALKFORGE_TOL", "1e-6", 1);
    CHECK(default_tolerance() == doctest::Approx(1e-6));
    setenv("WALKFORGE_TOL", "banana", 1);
    CHECK_THROWS_AS(default_tolerance(), UsageError);
    unsetenv("WALKFORGE_TOL");
}

TEST_CASE("stats table reports both complete-graph models") {
    TopologyRequest req;
    req.topology = "complete";
    req.m = 3;
    std::string table = stats_table(resolve(req));
    CHECK(table.find("complete-8 cnot") != std::string::npos);
    CHECK(table.find("complete-8 swap") != std::string::npos);
    // CNOT model: 3 gates, 3 CNOT-equivalents; swap model: 9 equivalents.
    CHECK(table.find(" 9 ") != std::string::npos);
}

TEST_CASE("stats table reports the gray-code X saving") {
    TopologyRequest req;
    req.topology = "hypercube";
    req.dim = 8;
    std::string table = stats_table(resolve(req));
    auto pos = table.find("x-count after lowering+cancellation");
    REQUIRE(pos != std::string::npos);
    int gray = 0;
    int binary = 0;
    REQUIRE(std::sscanf(table.c_str() + pos,
                        "x-count after lowering+cancellation: gray=%d binary=%d", &gray,
                        &binary) == 2);
    CHECK(gray < binary);
}

TEST_SUITE_END();
