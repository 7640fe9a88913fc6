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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "walkforge/walk.hpp"

namespace walkforge::report {

/// Inconsistent or incomplete command-line input; the CLI maps it to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raw flag values, before validation.
struct TopologyRequest {
    std::string topology;
    int nodes = -1;  // line
    int k = -1;      // cycle
    int dim = -1;    // hypercube
    int loops = 0;   // hypercube
    int m = -1;      // complete
    std::string variant;
    std::string ordering;
    std::string model;
    std::string coin;
};

struct ResolvedConfig {
    graphs::Topology topology;
    builders::BuilderOptions options;
    walk::CoinKind coin;
};

/// Validates the request and fills in defaults: LRA reflection circuit for
/// power-of-two cycles and lines, the transposition builder for other cycle
/// lengths, gray ordering for hypercubes, the CNOT model for complete
/// graphs, and the topology's default coin. Throws UsageError on
/// inconsistent flags.
ResolvedConfig resolve(const TopologyRequest &req);

std::string variant_name(builders::CycleVariant v);
std::string coin_name(walk::CoinKind k);

/// Decimal for position labels, zero-padded bitstring (most significant
/// qubit first) for full-register labels.
std::string format_label(long long label, walk::View view, int total_qubits);

struct ShotsSpec {
    int shots = 0;
    unsigned long long seed = 0;
};

/// Walk output. JSON: {topology, coin, steps, labels, probs_per_step} plus
/// an optional sampled-shots block; CSV: step,label,prob rows.
std::string walk_json(const walk::WalkConfig &cfg, const walk::WalkResult &result,
                      walk::View view, const std::optional<ShotsSpec> &shots);
std::string walk_csv(const walk::WalkConfig &cfg, const walk::WalkResult &result,
                     walk::View view);

struct CompareOutcome {
    std::vector<double> l1_per_step;
    std::vector<walk::Distribution> per_step; // side A's distributions
    double max_l1 = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_ms = 0.0;
    ir::GateStats stats;
    std::string json(const walk::WalkConfig &cfg) const;
};

/// Runs config A through the gate-level simulator and compares it per step
/// against either the analytical operator path of A (no B given) or the
/// gate-level run of config B.
CompareOutcome run_compare(const walk::WalkConfig &a, const std::optional<walk::WalkConfig> &b,
                           double tol);

/// WALKFORGE_TOL when set, else 1e-10.
double default_tolerance();

/// Gate counts per builder variant, before and after the optimization
/// pipeline; hypercubes report the gray-vs-binary X-count delta.
std::string stats_table(const ResolvedConfig &cfg);

} // namespace walkforge::report
