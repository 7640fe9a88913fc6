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

#include "walkforge/builders.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "walkforge/passes.hpp"

namespace walkforge::builders {

using ir::Control;
using ir::HGate;
using ir::MCSwapGate;
using ir::MCXGate;
using ir::Polarity;
using ir::SwapGate;
using ir::XGate;

namespace {

constexpr Polarity kPos = Polarity::Positive;
constexpr Polarity kNeg = Polarity::Negative;

int ceil_log2(int v) {
    int n = 0;
    while ((1 << n) < v) {
        n++;
    }
    return n;
}

Polarity bit_polarity(int value, int bit) {
    return ((value >> bit) & 1) != 0 ? kPos : kNeg;
}

std::vector<Gate> increment_gates(int n) {
    std::vector<Gate> gs;
    for (int w = n - 1; w >= 1; w--) {
        std::vector<Control> cs;
        for (int q = 0; q < w; q++) {
            cs.push_back({q, kPos});
        }
        gs.push_back(MCXGate{std::move(cs), w});
    }
    gs.push_back(XGate{0});
    return gs;
}

std::vector<Gate> decrement_gates(int n) {
    std::vector<Gate> gs;
    for (int w = n - 1; w >= 1; w--) {
        std::vector<Control> cs;
        for (int q = 0; q < w; q++) {
            cs.push_back({q, kNeg});
        }
        gs.push_back(MCXGate{std::move(cs), w});
    }
    gs.push_back(XGate{0});
    return gs;
}

// Coin-controlled reflection J = X^(xn) on the position register. The fan
// form uses one coin-to-position CNOT per qubit; the cascade form walks the
// flip down and back up through nearest neighbors.
std::vector<Gate> reflection_gates(int n, int coin, bool cascade) {
    std::vector<Gate> gs;
    if (!cascade) {
        for (int q = 0; q < n; q++) {
            gs.push_back(MCXGate{{{coin, kPos}}, q});
        }
        return gs;
    }
    for (int k = 1; k < n; k++) {
        gs.push_back(MCXGate{{{k, kPos}}, k - 1});
    }
    gs.push_back(MCXGate{{{coin, kPos}}, n - 1});
    for (int k = n - 1; k >= 1; k--) {
        gs.push_back(MCXGate{{{k, kPos}}, k - 1});
    }
    return gs;
}

// Core data of one transposition gate in the 4j+3 family: a controlled SWAP
// of adjacent qubits wrapped in CNOT echelons. swap_low is the lower qubit
// of the swapped pair and also the echelon depth.
struct ReflectedSwapCore {
    int index;
    int swap_low;
    std::vector<Control> core_controls;
};

// The full 4j+3 sequence for an n-qubit register, built by the recurrence
// S(n) = whitened S(n-1), basis gate, blackened S(n-1). Only the core swap
// gains the extra bottom control at each level. Memoized.
const std::vector<ReflectedSwapCore> &sequence_4j3(int n) {
    static std::mutex cache_mutex;
    static std::map<int, std::vector<ReflectedSwapCore>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache.find(3) == cache.end()) {
        cache.emplace(3, std::vector<ReflectedSwapCore>{{3, 1, {{0, kNeg}}}});
    }
    for (int level = 4; level <= n; level++) {
        if (cache.find(level) != cache.end()) {
            continue;
        }
        const auto &prev = cache.at(level - 1);
        std::vector<ReflectedSwapCore> seq;
        for (auto core : prev) {
            core.core_controls.push_back({level - 1, kNeg});
            seq.push_back(std::move(core));
        }
        std::vector<Control> basis_controls;
        for (int q = 0; q <= level - 3; q++) {
            basis_controls.push_back({q, kNeg});
        }
        seq.push_back({(1 << (level - 1)) - 1, level - 2, std::move(basis_controls)});
        for (auto core : prev) {
            core.index += 1 << (level - 1);
            core.core_controls.push_back({level - 1, kPos});
            seq.push_back(std::move(core));
        }
        cache.emplace(level, std::move(seq));
    }
    return cache.at(n);
}

void emit_reflected_swap(std::vector<Gate> &gs, const ReflectedSwapCore &core,
                         const std::vector<Control> &extra) {
    for (int k = 1; k <= core.swap_low; k++) {
        gs.push_back(MCXGate{{{k, kPos}}, k - 1});
    }
    std::vector<Control> cs = core.core_controls;
    cs.insert(cs.end(), extra.begin(), extra.end());
    gs.push_back(MCSwapGate{std::move(cs), core.swap_low, core.swap_low + 1});
    for (int k = core.swap_low; k >= 1; k--) {
        gs.push_back(MCXGate{{{k, kPos}}, k - 1});
    }
}

// One adjacent transposition T_i on n qubits, optionally with extra controls
// attached. Extra controls land on the single gate of the 2j and 4j+1
// classes and on the core swap of the 4j+3 class; the echelon CNOTs stay
// bare because they cancel on their own when the core idles.
std::vector<Gate> transposition_gates(int i, int n, const std::vector<Control> &extra) {
    if (n < 1 || i < 0 || i > (1 << n) - 2) {
        throw std::invalid_argument("transposition index out of range");
    }
    std::vector<Gate> gs;
    if (i % 2 == 0) {
        int j = i / 2;
        std::vector<Control> cs;
        for (int b = 0; b + 1 < n; b++) {
            cs.push_back({b + 1, bit_polarity(j, b)});
        }
        cs.insert(cs.end(), extra.begin(), extra.end());
        if (cs.empty()) {
            gs.push_back(XGate{0});
        } else {
            gs.push_back(MCXGate{std::move(cs), 0});
        }
    } else if (i % 4 == 1) {
        int j = (i - 1) / 4;
        std::vector<Control> cs;
        for (int b = 0; b + 2 < n; b++) {
            cs.push_back({b + 2, bit_polarity(j, b)});
        }
        cs.insert(cs.end(), extra.begin(), extra.end());
        if (cs.empty()) {
            gs.push_back(SwapGate{0, 1});
        } else {
            gs.push_back(MCSwapGate{std::move(cs), 0, 1});
        }
    } else {
        for (const auto &core : sequence_4j3(n)) {
            if (core.index == i) {
                emit_reflected_swap(gs, core, extra);
                return gs;
            }
        }
        throw std::logic_error("4j+3 sequence lookup failed");
    }
    return gs;
}

} // namespace

Circuit build_increment(int n) {
    if (n < 1) {
        throw std::invalid_argument("increment: need at least one qubit");
    }
    return Circuit{n, 0, increment_gates(n)};
}

Circuit build_decrement(int n) {
    if (n < 1) {
        throw std::invalid_argument("decrement: need at least one qubit");
    }
    return Circuit{n, 0, decrement_gates(n)};
}

Circuit build_cycle_shift(int n, CycleVariant variant) {
    if (n < 1) {
        throw std::invalid_argument("cycle shift: need at least one position qubit");
    }
    if (variant == CycleVariant::TranspositionK) {
        if (n < 2) {
            throw std::invalid_argument("transposition variant needs a cycle of length >= 3");
        }
        return build_k_cycle_shift(1 << n);
    }
    int coin = n;
    Circuit c{n, 1, {}};
    if (variant == CycleVariant::FullControlled) {
        for (auto &g : ir::controlled(increment_gates(n), std::vector<Control>{{coin, kNeg}})) {
            c.append(std::move(g));
        }
        for (auto &g : ir::controlled(decrement_gates(n), std::vector<Control>{{coin, kPos}})) {
            c.append(std::move(g));
        }
        return c;
    }
    bool cascade = variant == CycleVariant::JReducedNna;
    for (auto &g : reflection_gates(n, coin, cascade)) {
        c.append(std::move(g));
    }
    for (auto &g : increment_gates(n)) {
        c.append(std::move(g));
    }
    for (auto &g : reflection_gates(n, coin, cascade)) {
        c.append(std::move(g));
    }
    return c;
}

Circuit build_transposition(int i, int n) {
    return Circuit{n, 0, transposition_gates(i, n, {})};
}

Circuit build_k_cycle_shift(int k) {
    if (k < 3) {
        throw std::invalid_argument("k-cycle shift: k must be >= 3");
    }
    int n = ceil_log2(k);
    int coin = n;
    Circuit c{n, 1, {}};
    // Coin 0 block: truncated increment, T_{k-2} applied first.
    for (int i = k - 2; i >= 0; i--) {
        for (auto &g : transposition_gates(i, n, {{coin, kNeg}})) {
            c.append(std::move(g));
        }
    }
    // Coin 1 block: truncated decrement, T_0 applied first.
    for (int i = 0; i <= k - 2; i++) {
        for (auto &g : transposition_gates(i, n, {{coin, kPos}})) {
            c.append(std::move(g));
        }
    }
    return c;
}

std::vector<int> gray_sequence(int m) {
    int count = 1 << m;
    std::vector<int> seq(count);
    for (int t = 0; t < count; t++) {
        seq[t] = (count - 1) ^ (t ^ (t >> 1));
    }
    return seq;
}

Circuit build_hypercube_shift(int dimension, int self_loops, HypercubeOrdering ordering) {
    graphs::validate(graphs::Topology{graphs::Hypercube{dimension, self_loops}});
    int m = std::countr_zero(static_cast<unsigned>(dimension + self_loops));
    Circuit c{dimension, m, {}};
    std::vector<int> patterns;
    if (ordering == HypercubeOrdering::Binary) {
        for (int p = 0; p < (1 << m); p++) {
            patterns.push_back(p);
        }
    } else {
        patterns = gray_sequence(m);
    }
    for (int p : patterns) {
        if (p >= dimension) {
            continue; // self-loop direction: identity block, no gate
        }
        std::vector<Control> cs;
        for (int b = 0; b < m; b++) {
            cs.push_back({dimension + b, bit_polarity(p, b)});
        }
        if (cs.empty()) {
            c.append(XGate{p});
        } else {
            c.append(MCXGate{std::move(cs), p});
        }
    }
    return c;
}

Circuit build_complete_shift(int m, CompleteModel model) {
    if (m < 1) {
        throw std::invalid_argument("complete shift: m must be >= 1");
    }
    Circuit c{m, m, {}};
    for (int i = 0; i < m; i++) {
        if (model == CompleteModel::Cnot) {
            c.append(MCXGate{{{m + i, kPos}}, i});
        } else {
            c.append(SwapGate{i, m + i});
        }
    }
    return c;
}

Circuit build_line_walk_circuit(int n, CycleVariant variant) {
    if (n < 2) {
        throw std::invalid_argument("line walk: need at least two position qubits");
    }
    return build_cycle_shift(n, variant);
}

Circuit build_shift(const graphs::Topology &t, const BuilderOptions &options) {
    graphs::validate(t);
    return std::visit(
        [&](const auto &g) -> Circuit {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, graphs::Line>) {
                return build_line_walk_circuit(graphs::position_qubits(t), options.cycle_variant);
            } else if constexpr (std::is_same_v<T, graphs::Cycle>) {
                bool pow2 = (g.nodes & (g.nodes - 1)) == 0;
                if (!pow2 && options.cycle_variant != CycleVariant::TranspositionK) {
                    throw std::invalid_argument(
                        "cycle of " + std::to_string(g.nodes) +
                        " nodes is not a power of two; only the transposition variant applies");
                }
                if (options.cycle_variant == CycleVariant::TranspositionK) {
                    return build_k_cycle_shift(g.nodes);
                }
                return build_cycle_shift(graphs::position_qubits(t), options.cycle_variant);
            } else if constexpr (std::is_same_v<T, graphs::Hypercube>) {
                return build_hypercube_shift(g.dimension, g.self_loops,
                                             options.hypercube_ordering);
            } else {
                return build_complete_shift(graphs::coin_qubits(t), options.complete_model);
            }
        },
        t);
}

Circuit build_complete_full_network(int m) {
    if (m < 1) {
        throw std::invalid_argument("complete network: m must be >= 1");
    }
    Circuit c{m, m, {}};
    for (int j = 1; j < (1 << m); j++) {
        std::vector<Control> cs;
        for (int b = 0; b < m; b++) {
            cs.push_back({m + b, bit_polarity(j, b)});
        }
        std::vector<int> targets;
        for (int b = 0; b < m; b++) {
            if ((j >> b) & 1) {
                targets.push_back(b);
            }
        }
        for (auto &g : ir::split_multi_target(cs, targets)) {
            c.append(std::move(g));
        }
    }
    return c;
}

int line_label(int n, int state) {
    int dim = 1 << n;
    if (state < 0 || state >= dim) {
        throw std::invalid_argument("line label: state out of range");
    }
    return state < dim / 2 ? state : state - dim;
}

int line_state(int n, int label) {
    int dim = 1 << n;
    if (label < -dim / 2 || label >= dim / 2) {
        throw std::invalid_argument("line state: label out of range");
    }
    return label >= 0 ? label : label + dim;
}

} // namespace walkforge::builders
