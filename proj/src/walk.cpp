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

#include "walkforge/walk.hpp"

#include <cmath>
#include <stdexcept>

namespace walkforge::walk {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

int cycle_nodes_or_dim(const graphs::Topology &t) {
    if (const auto *c = std::get_if<graphs::Cycle>(&t)) {
        return c->nodes;
    }
    return 1 << graphs::position_qubits(t);
}

ComplexMatrix register_swap_matrix(int n) {
    // |c>|v> -> |v>|c> with both registers n qubits wide.
    std::size_t dim = std::size_t{1} << (2 * n);
    ComplexMatrix s(dim, dim);
    std::size_t half = std::size_t{1} << n;
    for (std::size_t c = 0; c < half; c++) {
        for (std::size_t v = 0; v < half; v++) {
            s.at(v * half + c, c * half + v) = 1.0;
        }
    }
    return s;
}

} // namespace

ComplexMatrix coin_matrix(const CoinSpec &c) {
    if (c.coin_qubits < 0) {
        throw std::invalid_argument("coin: negative register width");
    }
    std::size_t dim = std::size_t{1} << c.coin_qubits;
    if (c.kind == CoinKind::Identity) {
        return ComplexMatrix::identity(dim);
    }
    if (c.kind == CoinKind::Grover) {
        ComplexMatrix g(dim, dim);
        double off = 2.0 / static_cast<double>(dim);
        for (std::size_t r = 0; r < dim; r++) {
            for (std::size_t col = 0; col < dim; col++) {
                g.at(r, col) = off - (r == col ? 1.0 : 0.0);
            }
        }
        return g;
    }
    ComplexMatrix h2(2, 2);
    h2.at(0, 0) = kInvSqrt2;
    h2.at(0, 1) = kInvSqrt2;
    h2.at(1, 0) = kInvSqrt2;
    h2.at(1, 1) = -kInvSqrt2;
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (int i = 0; i < c.coin_qubits; i++) {
        out = numerics::kron(out, h2);
    }
    return out;
}

CoinKind default_coin(const graphs::Topology &t) {
    return std::holds_alternative<graphs::Hypercube>(t) ? CoinKind::Grover : CoinKind::Hadamard;
}

WalkConfig make_config(const graphs::Topology &t, CoinKind coin, int steps, int initial_coin,
                       int initial_position, builders::BuilderOptions options) {
    graphs::validate(t);
    WalkConfig cfg;
    cfg.topology = t;
    cfg.coin = CoinSpec{coin, graphs::coin_qubits(t)};
    cfg.steps = steps;
    cfg.initial_coin = initial_coin;
    cfg.initial_position = initial_position;
    cfg.options = options;
    return cfg;
}

ComplexMatrix analytical_shift(const graphs::Topology &t,
                               const builders::BuilderOptions &options) {
    if (std::holds_alternative<graphs::Complete>(t) &&
        options.complete_model == builders::CompleteModel::Swap) {
        return register_swap_matrix(graphs::position_qubits(t));
    }
    return graphs::shift_matrix(graphs::shunt_decompose(t));
}

ComplexMatrix evolution_matrix(const WalkConfig &cfg, Source source) {
    int n = graphs::position_qubits(cfg.topology);
    ComplexMatrix s = source == Source::Circuit
                          ? ir::compile(builders::build_shift(cfg.topology, cfg.options))
                          : analytical_shift(cfg.topology, cfg.options);
    ComplexMatrix coin_embedding =
        numerics::kron(coin_matrix(cfg.coin), ComplexMatrix::identity(std::size_t{1} << n));
    return s * coin_embedding;
}

ir::Circuit step_circuit(const WalkConfig &cfg) {
    ir::Circuit shift = builders::build_shift(cfg.topology, cfg.options);
    ir::Circuit c{shift.position_qubits, shift.coin_qubits, {}};
    int n = c.position_qubits;
    int m = c.coin_qubits;
    switch (cfg.coin.kind) {
        case CoinKind::Identity:
            break;
        case CoinKind::Hadamard:
            for (int b = 0; b < m; b++) {
                c.append(ir::HGate{n + b});
            }
            break;
        case CoinKind::Grover: {
            if (m > 0) {
                std::vector<int> qs;
                for (int b = 0; b < m; b++) {
                    qs.push_back(n + b);
                }
                c.append(ir::UnitaryBlockGate{std::move(qs), coin_matrix(cfg.coin)});
            }
            break;
        }
    }
    c.append(std::span<const ir::Gate>{shift.gates});
    return c;
}

Distribution distribution(const ComplexVector &state, const WalkConfig &cfg, View view) {
    int n = graphs::position_qubits(cfg.topology);
    int m = graphs::coin_qubits(cfg.topology);
    std::size_t pos_dim = std::size_t{1} << n;
    std::size_t coin_dim = std::size_t{1} << m;
    if (state.size() != pos_dim * coin_dim) {
        throw std::invalid_argument("distribution: state dimension mismatch");
    }
    std::vector<double> marginal(pos_dim, 0.0);
    for (std::size_t c = 0; c < coin_dim; c++) {
        for (std::size_t v = 0; v < pos_dim; v++) {
            marginal[v] += std::norm(state[c * pos_dim + v]);
        }
    }
    Distribution d;
    if (view == View::Position) {
        bool line = std::holds_alternative<graphs::Line>(cfg.topology);
        for (std::size_t v = 0; v < pos_dim; v++) {
            d.labels.push_back(line ? builders::line_label(n, static_cast<int>(v))
                                    : static_cast<long long>(v));
            d.probs.push_back(marginal[v]);
        }
    } else {
        // Position measurement reported over full-register labels: the coin
        // register is left unmeasured and its bits read 0.
        for (std::size_t idx = 0; idx < pos_dim * coin_dim; idx++) {
            d.labels.push_back(static_cast<long long>(idx));
            d.probs.push_back(idx < pos_dim ? marginal[idx] : 0.0);
        }
    }
    return d;
}

WalkResult run_walk(const WalkConfig &cfg, Source source, View view) {
    graphs::validate(cfg.topology);
    int n = graphs::position_qubits(cfg.topology);
    int m = graphs::coin_qubits(cfg.topology);
    if (cfg.coin.coin_qubits != m) {
        throw std::invalid_argument("walk: coin register width does not match topology");
    }
    if (cfg.steps < 0) {
        throw std::invalid_argument("walk: negative step count");
    }
    if (cfg.initial_coin < 0 || cfg.initial_coin >= (1 << m)) {
        throw std::invalid_argument("walk: initial coin out of range");
    }
    if (cfg.initial_position < 0 || cfg.initial_position >= cycle_nodes_or_dim(cfg.topology)) {
        throw std::invalid_argument("walk: initial position out of range");
    }
    std::size_t dim = std::size_t{1} << (n + m);
    ComplexVector state(dim);
    state[(static_cast<std::size_t>(cfg.initial_coin) << n) + cfg.initial_position] = 1.0;

    WalkResult result;
    result.per_step.push_back(distribution(state, cfg, view));

    ir::Circuit step;
    ComplexMatrix u;
    if (source == Source::Circuit) {
        step = step_circuit(cfg);
    } else {
        u = evolution_matrix(cfg, Source::Operator);
    }
    for (int t = 1; t <= cfg.steps; t++) {
        if (source == Source::Circuit) {
            ir::apply_circuit(step, state);
        } else {
            state = u * state;
        }
        if (std::abs(numerics::norm_sq(state) - 1.0) > numerics::kStateNormTol) {
            throw std::runtime_error("walk: state norm drifted beyond tolerance");
        }
        result.per_step.push_back(distribution(state, cfg, view));
    }
    result.final_state = std::move(state);
    return result;
}

double l1_distance(const Distribution &p, const Distribution &q) {
    if (p.labels != q.labels) {
        throw std::invalid_argument("l1_distance: label sets differ");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.probs.size(); i++) {
        sum += std::abs(p.probs[i] - q.probs[i]);
    }
    return 0.5 * sum;
}

std::optional<int> cycle_length(const WalkConfig &cfg, int t_max, double tol) {
    if (t_max < 1) {
        throw std::invalid_argument("cycle_length: t_max must be >= 1");
    }
    ComplexMatrix u = evolution_matrix(cfg, Source::Operator);
    ComplexMatrix power = ComplexMatrix::identity(u.rows());
    for (int t = 1; t <= t_max; t++) {
        power = u * power;
        if (numerics::max_abs_diff_identity(power) <= tol) {
            return t;
        }
    }
    return std::nullopt;
}

int line_step_bound(int n, int n0) {
    if (n < 2) {
        throw std::invalid_argument("line_step_bound: need n >= 2");
    }
    int half = 1 << (n - 1);
    if (n0 < -half || n0 >= half) {
        throw std::invalid_argument("line_step_bound: label out of range");
    }
    return half - n0 - 1;
}

} // namespace walkforge::walk
