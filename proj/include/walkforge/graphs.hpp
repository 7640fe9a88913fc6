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

#include <string>
#include <variant>
#include <vector>

#include "walkforge/numerics.hpp"

namespace walkforge::graphs {

using numerics::ComplexMatrix;

// Walk topologies. Register sizes are implied:
//   Line{2^n}        n position qubits, 1 coin qubit (relabeled 2^n-cycle)
//   Cycle{k}, k >= 3 ceil(log2 k) position qubits, 1 coin qubit; k that is
//                    not a power of two is embedded in the smallest register
//                    that fits, with the extra states left as fixed points
//   Hypercube{d, s}  d position qubits, log2(d+s) coin qubits; d+s must be a
//                    power of two, s directions act as self-loops
//   Complete{2^m}    m position qubits, m coin qubits, self-loops included
struct Line {
    int nodes;
};
struct Cycle {
    int nodes;
};
struct Hypercube {
    int dimension;
    int self_loops;
};
struct Complete {
    int nodes;
};

using Topology = std::variant<Line, Cycle, Hypercube, Complete>;

/// Throws std::invalid_argument when size parameters are out of contract.
void validate(const Topology &t);

int position_qubits(const Topology &t);
int coin_qubits(const Topology &t);

/// Short human-readable tag, e.g. "cycle-5" or "hypercube-3+1".
std::string describe(const Topology &t);

/// One permutation of the position space: map[v] is the vertex the arc
/// leaving v points to. Matrix form M has M[map[v], v] = 1, i.e. the
/// transposed permutation matrix used as a block of the shift operator.
struct Shunt {
    int dim = 0;
    std::vector<int> map;

    ComplexMatrix matrix() const;
    bool is_permutation() const;
};

/// Ordered shunts, one per coin basis state. The sum of the shunt matrices
/// reconstructs the transposed adjacency matrix of the graph the walk runs
/// on (including any arcs added by power-of-two embedding).
struct ShuntDecomposition {
    int dim = 0;
    int coin_qubits = 0;
    std::vector<Shunt> shunts;
};

/// 0/1 symmetric adjacency matrix of the declared graph. For Cycle{k} with
/// k below a power of two this is the padded matrix with zero rows/columns
/// at the unused states; for Hypercube the diagonal carries the self-loop
/// count; for Line it is the plain path matrix.
ComplexMatrix adjacency(const Topology &t);

/// Adjacency matrix of the graph the shift operator actually realizes:
/// Line becomes the cycle it is relabeled from, embedded cycles gain one
/// self-arc per shunt at each padding state, other topologies coincide
/// with adjacency().
ComplexMatrix augmented_adjacency(const Topology &t);

ShuntDecomposition shunt_decompose(const Topology &t);

/// True iff the shunt matrices sum exactly to a^T. Throws on dim mismatch.
bool validate_decomposition(const ShuntDecomposition &d, const ComplexMatrix &a);

/// Block-diagonal shift operator: direct sum of the shunt matrices in coin
/// order. Composite basis index is c * 2^n + v (coin in the high bits).
ComplexMatrix shift_matrix(const ShuntDecomposition &d);

} // namespace walkforge::graphs
