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

#include "walkforge/builders.hpp"
#include "walkforge/circuit.hpp"
#include "walkforge/graphs.hpp"

namespace walkforge::walk {

using numerics::ComplexMatrix;
using numerics::ComplexVector;

enum class CoinKind { Hadamard, Grover, Identity };

struct CoinSpec {
    CoinKind kind = CoinKind::Hadamard;
    int coin_qubits = 1;
};

/// Hadamard: m-fold tensor power of the 2x2 Hadamard. Grover: 2|s><s| - I
/// over 2^m with s uniform. Identity: I.
ComplexMatrix coin_matrix(const CoinSpec &c);

/// Hadamard everywhere except the hypercube, which walks under Grover.
CoinKind default_coin(const graphs::Topology &t);

enum class Source { Circuit, Operator };

struct WalkConfig {
    graphs::Topology topology;
    CoinSpec coin;
    int steps = 0;
    int initial_coin = 0;
    int initial_position = 0;
    builders::BuilderOptions options;
};

/// Fills the coin register width from the topology.
WalkConfig make_config(const graphs::Topology &t, CoinKind coin, int steps, int initial_coin = 0,
                       int initial_position = 0, builders::BuilderOptions options = {});

struct Distribution {
    std::vector<long long> labels;
    std::vector<double> probs;
};

/// The operator-side shift: block-diagonal shunt form for every topology,
/// except the complete graph's Swap model whose shift exchanges the two
/// registers and is not block diagonal.
ComplexMatrix analytical_shift(const graphs::Topology &t, const builders::BuilderOptions &options);

/// U = S (C x I). The circuit source compiles the builder circuit into S;
/// the operator source assembles S from the shunt decomposition.
ComplexMatrix evolution_matrix(const WalkConfig &cfg, Source source);

/// One step as gates: coin gates on the coin register, then the shift.
ir::Circuit step_circuit(const WalkConfig &cfg);

// Which labels a distribution reports. Position marginalizes the coin and
// labels vertices (signed two's-complement labels on lines). FullRegister
// keeps the whole-register bitstring labels of a position measurement: the
// coin register is not measured, so its bits read 0 in every outcome label.
enum class View { Position, FullRegister };

Distribution distribution(const ComplexVector &state, const WalkConfig &cfg,
                          View view = View::Position);

struct WalkResult {
    std::vector<Distribution> per_step; // steps + 1 entries, step 0 first
    ComplexVector final_state;
};

/// Runs the walk from basis state c0 * 2^n + v0. The circuit source applies
/// gates directly to the state vector; the operator source multiplies by the
/// evolution matrix. Throws on invalid initial indices.
WalkResult run_walk(const WalkConfig &cfg, Source source = Source::Circuit,
                    View view = View::Position);

/// Half the total variation: (1/2) sum |p_i - q_i|. Throws on label mismatch.
double l1_distance(const Distribution &p, const Distribution &q);

/// Smallest T <= t_max with max|U^T - I| <= tol, if any.
std::optional<int> cycle_length(const WalkConfig &cfg, int t_max = 64, double tol = 1e-9);

/// Steps before a line walk wraps: 2^(n-1) - n0 - 1 for start label n0.
int line_step_bound(int n, int n0);

} // namespace walkforge::walk
