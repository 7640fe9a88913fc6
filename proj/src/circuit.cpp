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

#include "walkforge/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace walkforge::ir {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

struct ControlMasks {
    std::size_t positive = 0;
    std::size_t negative = 0;

    bool matches(std::size_t index) const {
        return (index & positive) == positive && (index & negative) == 0;
    }
};

ControlMasks control_masks(const std::vector<Control> &controls) {
    ControlMasks m;
    for (const auto &c : controls) {
        std::size_t bit = std::size_t{1} << c.qubit;
        if (c.polarity == Polarity::Positive) {
            m.positive |= bit;
        } else {
            m.negative |= bit;
        }
    }
    return m;
}

void swap_rows(Complex *data, std::size_t width, std::size_t r0, std::size_t r1) {
    std::swap_ranges(data + r0 * width, data + (r0 + 1) * width, data + r1 * width);
}

void check_qubit(int q, int num_qubits) {
    if (q < 0 || q >= num_qubits) {
        throw std::invalid_argument("gate qubit index out of range");
    }
}

} // namespace

std::vector<int> gate_qubits(const Gate &g) {
    return std::visit(
        [](const auto &gate) -> std::vector<int> {
            using T = std::decay_t<decltype(gate)>;
            std::vector<int> qs;
            if constexpr (std::is_same_v<T, XGate> || std::is_same_v<T, HGate>) {
                qs.push_back(gate.target);
            } else if constexpr (std::is_same_v<T, SwapGate>) {
                qs = {gate.a, gate.b};
            } else if constexpr (std::is_same_v<T, MCXGate>) {
                for (const auto &c : gate.controls) {
                    qs.push_back(c.qubit);
                }
                qs.push_back(gate.target);
            } else if constexpr (std::is_same_v<T, MCSwapGate>) {
                for (const auto &c : gate.controls) {
                    qs.push_back(c.qubit);
                }
                qs.push_back(gate.a);
                qs.push_back(gate.b);
            } else {
                qs = gate.qubits;
            }
            return qs;
        },
        g);
}

void validate_gate(const Gate &g, int num_qubits) {
    std::vector<int> qs = gate_qubits(g);
    for (int q : qs) {
        check_qubit(q, num_qubits);
    }
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
        throw std::invalid_argument("gate uses a qubit twice");
    }
    if (const auto *u = std::get_if<UnitaryBlockGate>(&g)) {
        std::size_t want = std::size_t{1} << u->qubits.size();
        if (u->matrix.rows() != want || u->matrix.cols() != want) {
            throw std::invalid_argument("unitary block: matrix size does not match qubit count");
        }
        if (!numerics::is_unitary(u->matrix, numerics::kUnitaryProductTol)) {
            throw std::invalid_argument("unitary block: matrix is not unitary");
        }
    }
}

void Circuit::validate() const {
    if (position_qubits < 0 || coin_qubits < 0 || num_qubits() < 1) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
    for (const auto &g : gates) {
        validate_gate(g, num_qubits());
    }
}

void apply_gate(const Gate &g, Complex *data, std::size_t dim, std::size_t width) {
    std::visit(
        [&](const auto &gate) {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, XGate>) {
                std::size_t bit = std::size_t{1} << gate.target;
                for (std::size_t r = 0; r < dim; r++) {
                    if ((r & bit) == 0) {
                        swap_rows(data, width, r, r | bit);
                    }
                }
            } else if constexpr (std::is_same_v<T, HGate>) {
                std::size_t bit = std::size_t{1} << gate.target;
                for (std::size_t r = 0; r < dim; r++) {
                    if ((r & bit) != 0) {
                        continue;
                    }
                    Complex *lo = data + r * width;
                    Complex *hi = data + (r | bit) * width;
                    for (std::size_t c = 0; c < width; c++) {
                        Complex a = lo[c];
                        Complex b = hi[c];
                        lo[c] = (a + b) * kInvSqrt2;
                        hi[c] = (a - b) * kInvSqrt2;
                    }
                }
            } else if constexpr (std::is_same_v<T, SwapGate>) {
                std::size_t ma = std::size_t{1} << gate.a;
                std::size_t mb = std::size_t{1} << gate.b;
                for (std::size_t r = 0; r < dim; r++) {
                    if ((r & ma) != 0 && (r & mb) == 0) {
                        swap_rows(data, width, r, (r ^ ma) | mb);
                    }
                }
            } else if constexpr (std::is_same_v<T, MCXGate>) {
                ControlMasks cm = control_masks(gate.controls);
                std::size_t bit = std::size_t{1} << gate.target;
                for (std::size_t r = 0; r < dim; r++) {
                    if ((r & bit) == 0 && cm.matches(r)) {
                        swap_rows(data, width, r, r | bit);
                    }
                }
            } else if constexpr (std::is_same_v<T, MCSwapGate>) {
                ControlMasks cm = control_masks(gate.controls);
                std::size_t ma = std::size_t{1} << gate.a;
                std::size_t mb = std::size_t{1} << gate.b;
                for (std::size_t r = 0; r < dim; r++) {
                    if ((r & ma) != 0 && (r & mb) == 0 && cm.matches(r)) {
                        swap_rows(data, width, r, (r ^ ma) | mb);
                    }
                }
            } else {
                // Unitary block: gather the 2^k rows of each coset, hit them
                // with the small matrix, scatter back.
                std::size_t k = gate.qubits.size();
                std::size_t block = std::size_t{1} << k;
                std::size_t qubit_mask = 0;
                for (int q : gate.qubits) {
                    qubit_mask |= std::size_t{1} << q;
                }
                std::vector<Complex> scratch(block * width);
                std::vector<std::size_t> offsets(block);
                for (std::size_t x = 0; x < block; x++) {
                    std::size_t off = 0;
                    for (std::size_t b = 0; b < k; b++) {
                        if ((x >> b) & 1) {
                            off |= std::size_t{1} << gate.qubits[b];
                        }
                    }
                    offsets[x] = off;
                }
                for (std::size_t base = 0; base < dim; base++) {
                    if ((base & qubit_mask) != 0) {
                        continue;
                    }
                    for (std::size_t x = 0; x < block; x++) {
                        Complex *dst = scratch.data() + x * width;
                        std::fill(dst, dst + width, Complex{});
                        for (std::size_t y = 0; y < block; y++) {
                            Complex f = gate.matrix.at(x, y);
                            if (f == Complex{}) {
                                continue;
                            }
                            const Complex *src = data + (base | offsets[y]) * width;
                            for (std::size_t c = 0; c < width; c++) {
                                dst[c] += f * src[c];
                            }
                        }
                    }
                    for (std::size_t x = 0; x < block; x++) {
                        std::copy(scratch.data() + x * width, scratch.data() + (x + 1) * width,
                                  data + (base | offsets[x]) * width);
                    }
                }
            }
        },
        g);
}

void apply_circuit(const Circuit &c, ComplexVector &state) {
    c.validate();
    if (state.size() != c.dim()) {
        throw std::invalid_argument("apply_circuit: state dimension mismatch");
    }
    for (const auto &g : c.gates) {
        apply_gate(g, state.data(), c.dim(), 1);
    }
}

ComplexMatrix compile(const Circuit &c) {
    c.validate();
    ComplexMatrix m = ComplexMatrix::identity(c.dim());
    for (const auto &g : c.gates) {
        apply_gate(g, m.data().data(), c.dim(), c.dim());
    }
    return m;
}

Gate controlled(const Gate &g, std::span<const Control> controls) {
    std::vector<int> qs = gate_qubits(g);
    for (const auto &c : controls) {
        if (std::find(qs.begin(), qs.end(), c.qubit) != qs.end()) {
            throw std::invalid_argument("controlled: control qubit collides with gate");
        }
    }
    auto merged = [&](const std::vector<Control> &existing) {
        std::vector<Control> out = existing;
        out.insert(out.end(), controls.begin(), controls.end());
        return out;
    };
    return std::visit(
        [&](const auto &gate) -> Gate {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, XGate>) {
                return MCXGate{{controls.begin(), controls.end()}, gate.target};
            } else if constexpr (std::is_same_v<T, MCXGate>) {
                return MCXGate{merged(gate.controls), gate.target};
            } else if constexpr (std::is_same_v<T, SwapGate>) {
                return MCSwapGate{{controls.begin(), controls.end()}, gate.a, gate.b};
            } else if constexpr (std::is_same_v<T, MCSwapGate>) {
                return MCSwapGate{merged(gate.controls), gate.a, gate.b};
            } else {
                throw std::invalid_argument("controlled: unsupported gate kind");
            }
        },
        g);
}

std::vector<Gate> controlled(std::span<const Gate> gates, std::span<const Control> controls) {
    std::vector<Gate> out;
    out.reserve(gates.size());
    for (const auto &g : gates) {
        out.push_back(controlled(g, controls));
    }
    return out;
}

GateStats gate_stats(const Circuit &c) {
    GateStats stats;
    for (const auto &g : c.gates) {
        std::string kind = std::visit(
            [](const auto &gate) -> std::string {
                using T = std::decay_t<decltype(gate)>;
                if constexpr (std::is_same_v<T, XGate>) {
                    return "X";
                } else if constexpr (std::is_same_v<T, HGate>) {
                    return "H";
                } else if constexpr (std::is_same_v<T, SwapGate>) {
                    return "SWAP";
                } else if constexpr (std::is_same_v<T, MCXGate>) {
                    if (gate.controls.empty()) {
                        return "X";
                    }
                    if (gate.controls.size() == 1 &&
                        gate.controls[0].polarity == Polarity::Positive) {
                        return "CX";
                    }
                    return "MCX";
                } else if constexpr (std::is_same_v<T, MCSwapGate>) {
                    return gate.controls.empty() ? "SWAP" : "MCSWAP";
                } else {
                    return "UNITARY";
                }
            },
            g);
        stats.total++;
        stats.by_kind[kind]++;
    }
    auto count_of = [&](const char *kind) {
        auto it = stats.by_kind.find(kind);
        return it == stats.by_kind.end() ? 0 : it->second;
    };
    stats.cnot_equivalent = count_of("CX") + 3 * count_of("SWAP");
    return stats;
}

} // namespace walkforge::ir
