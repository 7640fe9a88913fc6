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

#include "walkforge/circuit.hpp"
#include "walkforge/graphs.hpp"

namespace walkforge::builders {

using ir::Circuit;
using ir::Gate;

// How the cycle (and line) shift circuit is realized. All variants compile
// to the same block matrix diag(increment, decrement):
//   FullControlled  every increment/decrement gate carries a coin control
//   JReducedNna     reflection trick, reflection as a nearest-neighbor
//                   CNOT cascade
//   JReducedLra     reflection trick, reflection as a coin-controlled X fan
//   TranspositionK  product of adjacent transpositions, works for any k
enum class CycleVariant { FullControlled, JReducedNna, JReducedLra, TranspositionK };

enum class HypercubeOrdering { Binary, Gray };

// Cnot realizes |c>|v> -> |c>|v xor c>; Swap exchanges the registers,
// |c>|v> -> |v>|c>. Same graph, different walker dynamics.
enum class CompleteModel { Cnot, Swap };

struct BuilderOptions {
    CycleVariant cycle_variant = CycleVariant::JReducedLra;
    HypercubeOrdering hypercube_ordering = HypercubeOrdering::Gray;
    CompleteModel complete_model = CompleteModel::Cnot;
};

/// |v> -> |v+1 mod 2^n>: descending ladder of all-positive MCX gates, widest
/// first, ending in X on qubit 0.
Circuit build_increment(int n);

/// |v> -> |v-1 mod 2^n>: the same ladder with all-negative controls.
Circuit build_decrement(int n);

/// Shift of the 2^n-cycle on n position qubits plus one coin qubit; coin 0
/// selects increment, coin 1 decrement.
Circuit build_cycle_shift(int n, CycleVariant variant);

/// Adjacent transposition: swaps basis states i and i+1, fixes the rest.
/// Even i is a single MCX, i = 4j+1 a controlled SWAP, i = 4j+3 comes from
/// the recursive echelon construction. 0 <= i <= 2^n - 2.
Circuit build_transposition(int i, int n);

/// Shift of the k-cycle (k >= 3) embedded in the smallest fitting register:
/// controlled truncated transposition products; states >= k stay fixed.
Circuit build_k_cycle_shift(int k);

/// Shift of the d-cube with s self-loop directions (d + s a power of two).
/// One coin-pattern-controlled X per dimension; the ordering picks the
/// emission sequence of control patterns (gray starts from all ones).
Circuit build_hypercube_shift(int dimension, int self_loops, HypercubeOrdering ordering);

/// Shift for the complete graph on 2^m vertices with self-loops; m >= 1.
Circuit build_complete_shift(int m, CompleteModel model);

/// Same circuit as the 2^n-cycle shift; line semantics come from reading
/// position labels as two's-complement integers. n >= 2.
Circuit build_line_walk_circuit(int n, CycleVariant variant);

/// Dispatches on topology. Throws std::invalid_argument when the options
/// are inconsistent with the topology (a non-power-of-two cycle requires
/// the transposition variant).
Circuit build_shift(const graphs::Topology &t, const BuilderOptions &options);

/// The pre-reduction control network for the complete graph: every coin
/// pattern controlling the X mask with the same value, already split into
/// single-target gates. merge_control_pairs reduces it to m CNOTs.
Circuit build_complete_full_network(int m);

/// Gray-code sequence over m-bit patterns starting from the all-ones string;
/// consecutive entries differ in exactly one bit.
std::vector<int> gray_sequence(int m);

/// Two's-complement reading of an n-bit position state, in
/// [-2^(n-1), 2^(n-1)-1].
int line_label(int n, int state);

/// Inverse of line_label.
int line_state(int n, int label);

} // namespace walkforge::builders
