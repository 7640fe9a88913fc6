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

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "walkforge/numerics.hpp"

namespace walkforge::ir {

using numerics::Complex;
using numerics::ComplexMatrix;
using numerics::ComplexVector;

// Conventions, fixed globally:
//   * basis-index bit i corresponds to qubit i;
//   * qubits 0..n-1 are the position register, qubits n..n+m-1 the coin
//     register, so a composite basis index decomposes as c * 2^n + v;
//   * gates listed first are applied first (they are the rightmost factors
//     of the compiled matrix product);
//   * a control pattern over the coin register reads coin qubit n+b as bit b
//     of the pattern value, positive control = 1, negative control = 0.

enum class Polarity { Positive, Negative };

struct Control {
    int qubit;
    Polarity polarity;

    bool operator==(const Control &) const = default;
};

struct XGate {
    int target;
};

struct HGate {
    int target;
};

struct SwapGate {
    int a;
    int b;
};

struct MCXGate {
    std::vector<Control> controls;
    int target;
};

struct MCSwapGate {
    std::vector<Control> controls;
    int a;
    int b;
};

/// Escape hatch for dense operators (coin matrices, parsed phase gates).
/// Bit b of the block's local index lives on qubits[b].
struct UnitaryBlockGate {
    std::vector<int> qubits;
    ComplexMatrix matrix;
};

using Gate = std::variant<XGate, HGate, SwapGate, MCXGate, MCSwapGate, UnitaryBlockGate>;

/// Every qubit the gate touches (targets and controls).
std::vector<int> gate_qubits(const Gate &g);

/// Throws std::invalid_argument if qubits repeat, fall outside the register,
/// or a unitary block carries a non-unitary or mis-sized matrix.
void validate_gate(const Gate &g, int num_qubits);

struct Circuit {
    int position_qubits = 0;
    int coin_qubits = 0;
    std::vector<Gate> gates;

    int num_qubits() const { return position_qubits + coin_qubits; }
    std::size_t dim() const { return std::size_t{1} << num_qubits(); }

    void append(Gate g) { gates.push_back(std::move(g)); }
    void append(std::span<const Gate> gs) { gates.insert(gates.end(), gs.begin(), gs.end()); }

    void validate() const;
};

/// Applies one gate in place to `count` states packed as rows of `width`
/// amplitudes each (width 1 for a single state vector, width=dim with the
/// identity start for compiling a full unitary).
void apply_gate(const Gate &g, Complex *data, std::size_t dim, std::size_t width);

/// Applies the whole circuit to a state vector, first gate first.
void apply_circuit(const Circuit &c, ComplexVector &state);

/// Dense 2^(n+m) unitary of the circuit; the product of the gate embeddings
/// with the first-listed gate applied first.
ComplexMatrix compile(const Circuit &c);

/// Attaches controls to a gate. Supports X/MCX (result MCX) and
/// SWAP/MCSWAP (result MCSWAP); throws for H and unitary blocks, and on any
/// qubit collision between the controls and the gate.
Gate controlled(const Gate &g, std::span<const Control> controls);

/// Controls every gate of a sub-circuit; valid because a block-controlled
/// product equals the product of block-controlled factors.
std::vector<Gate> controlled(std::span<const Gate> gates, std::span<const Control> controls);

struct GateStats {
    int total = 0;
    std::map<std::string, int> by_kind;
    int cnot_equivalent = 0;
};

/// Counts per kind; `cnot_equivalent` counts plain CNOTs as 1 and SWAPs as 3
/// (multi-control gates are reported by kind only).
GateStats gate_stats(const Circuit &c);

} // namespace walkforge::ir
