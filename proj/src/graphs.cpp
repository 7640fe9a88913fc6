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

#include "walkforge/graphs.hpp"

#include <bit>
#include <stdexcept>

namespace walkforge::graphs {

namespace {

bool is_pow2(int v) {
    return v > 0 && std::has_single_bit(static_cast<unsigned>(v));
}

int log2_exact(int v) {
    return std::countr_zero(static_cast<unsigned>(v));
}

int ceil_log2(int v) {
    int n = 0;
    while ((1 << n) < v) {
        n++;
    }
    return n;
}

Shunt identity_shunt(int dim) {
    Shunt s{dim, std::vector<int>(dim)};
    for (int v = 0; v < dim; v++) {
        s.map[v] = v;
    }
    return s;
}

// Increment mod k on states < k, identity on the padding states.
Shunt k_increment_shunt(int k, int dim) {
    Shunt s = identity_shunt(dim);
    for (int v = 0; v < k; v++) {
        s.map[v] = (v + 1) % k;
    }
    return s;
}

Shunt k_decrement_shunt(int k, int dim) {
    Shunt s = identity_shunt(dim);
    for (int v = 0; v < k; v++) {
        s.map[v] = (v + k - 1) % k;
    }
    return s;
}

Shunt xor_shunt(int mask, int dim) {
    Shunt s{dim, std::vector<int>(dim)};
    for (int v = 0; v < dim; v++) {
        s.map[v] = v ^ mask;
    }
    return s;
}

ComplexMatrix ring_matrix(int k, int dim) {
    ComplexMatrix a(dim, dim);
    for (int v = 0; v < k; v++) {
        a.at(v, (v + 1) % k) += 1.0;
        a.at((v + 1) % k, v) += 1.0;
    }
    return a;
}

} // namespace

void validate(const Topology &t) {
    std::visit(
        [](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Line>) {
                if (g.nodes < 2 || !is_pow2(g.nodes)) {
                    throw std::invalid_argument("line: node count must be a power of two >= 2");
                }
            } else if constexpr (std::is_same_v<T, Cycle>) {
                if (g.nodes < 3) {
                    throw std::invalid_argument("cycle: node count must be >= 3");
                }
            } else if constexpr (std::is_same_v<T, Hypercube>) {
                if (g.dimension < 1 || g.self_loops < 0 || !is_pow2(g.dimension + g.self_loops)) {
                    throw std::invalid_argument(
                        "hypercube: dimension + self_loops must be a power of two, dimension >= 1");
                }
            } else if constexpr (std::is_same_v<T, Complete>) {
                if (g.nodes < 2 || !is_pow2(g.nodes)) {
                    throw std::invalid_argument("complete: node count must be a power of two >= 2");
                }
            }
        },
        t);
}

int position_qubits(const Topology &t) {
    validate(t);
    return std::visit(
        [](const auto &g) -> int {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Line>) {
                return log2_exact(g.nodes);
            } else if constexpr (std::is_same_v<T, Cycle>) {
                return ceil_log2(g.nodes);
            } else if constexpr (std::is_same_v<T, Hypercube>) {
                return g.dimension;
            } else {
                return log2_exact(g.nodes);
            }
        },
        t);
}

int coin_qubits(const Topology &t) {
    validate(t);
    return std::visit(
        [](const auto &g) -> int {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Hypercube>) {
                return log2_exact(g.dimension + g.self_loops);
            } else if constexpr (std::is_same_v<T, Complete>) {
                return log2_exact(g.nodes);
            } else {
                (void)g;
                return 1;
            }
        },
        t);
}

std::string describe(const Topology &t) {
    return std::visit(
        [](const auto &g) -> std::string {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Line>) {
                return "line-" + std::to_string(g.nodes);
            } else if constexpr (std::is_same_v<T, Cycle>) {
                return "cycle-" + std::to_string(g.nodes);
            } else if constexpr (std::is_same_v<T, Hypercube>) {
                return "hypercube-" + std::to_string(g.dimension) + "+" +
                       std::to_string(g.self_loops);
            } else {
                return "complete-" + std::to_string(g.nodes);
            }
        },
        t);
}

ComplexMatrix Shunt::matrix() const {
    ComplexMatrix m(dim, dim);
    for (int v = 0; v < dim; v++) {
        m.at(map[v], v) = 1.0;
    }
    return m;
}

bool Shunt::is_permutation() const {
    if (static_cast<int>(map.size()) != dim) {
        return false;
    }
    std::vector<bool> seen(dim, false);
    for (int v = 0; v < dim; v++) {
        if (map[v] < 0 || map[v] >= dim || seen[map[v]]) {
            return false;
        }
        seen[map[v]] = true;
    }
    return true;
}

ComplexMatrix adjacency(const Topology &t) {
    validate(t);
    return std::visit(
        [](const auto &g) -> ComplexMatrix {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Line>) {
                ComplexMatrix a(g.nodes, g.nodes);
                for (int v = 0; v + 1 < g.nodes; v++) {
                    a.at(v, v + 1) = 1.0;
                    a.at(v + 1, v) = 1.0;
                }
                return a;
            } else if constexpr (std::is_same_v<T, Cycle>) {
                int dim = 1 << ceil_log2(g.nodes);
                return ring_matrix(g.nodes, dim);
            } else if constexpr (std::is_same_v<T, Hypercube>) {
                int dim = 1 << g.dimension;
                ComplexMatrix a(dim, dim);
                for (int u = 0; u < dim; u++) {
                    a.at(u, u) = static_cast<double>(g.self_loops);
                    for (int b = 0; b < g.dimension; b++) {
                        a.at(u, u ^ (1 << b)) = 1.0;
                    }
                }
                return a;
            } else {
                ComplexMatrix a(g.nodes, g.nodes);
                for (int u = 0; u < g.nodes; u++) {
                    for (int v = 0; v < g.nodes; v++) {
                        a.at(u, v) = 1.0;
                    }
                }
                return a;
            }
        },
        t);
}

ComplexMatrix augmented_adjacency(const Topology &t) {
    validate(t);
    return std::visit(
        [&](const auto &g) -> ComplexMatrix {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Line>) {
                return ring_matrix(g.nodes, g.nodes);
            } else if constexpr (std::is_same_v<T, Cycle>) {
                int dim = 1 << ceil_log2(g.nodes);
                ComplexMatrix a = ring_matrix(g.nodes, dim);
                // Padding states pick up one self-arc per shunt.
                for (int v = g.nodes; v < dim; v++) {
                    a.at(v, v) = 2.0;
                }
                return a;
            } else {
                return adjacency(Topology{g});
            }
        },
        t);
}

ShuntDecomposition shunt_decompose(const Topology &t) {
    validate(t);
    int n = position_qubits(t);
    int dim = 1 << n;
    ShuntDecomposition d;
    d.dim = dim;
    d.coin_qubits = coin_qubits(t);
    std::visit(
        [&](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Line>) {
                d.shunts.push_back(k_increment_shunt(dim, dim));
                d.shunts.push_back(k_decrement_shunt(dim, dim));
            } else if constexpr (std::is_same_v<T, Cycle>) {
                d.shunts.push_back(k_increment_shunt(g.nodes, dim));
                d.shunts.push_back(k_decrement_shunt(g.nodes, dim));
            } else if constexpr (std::is_same_v<T, Hypercube>) {
                // Coin i flips bit i; the removed directions sit at the top
                // coin indices as identity shunts.
                for (int i = 0; i < g.dimension; i++) {
                    d.shunts.push_back(xor_shunt(1 << i, dim));
                }
                for (int i = 0; i < g.self_loops; i++) {
                    d.shunts.push_back(identity_shunt(dim));
                }
            } else {
                for (int mask = 0; mask < g.nodes; mask++) {
                    d.shunts.push_back(xor_shunt(mask, dim));
                }
            }
        },
        t);
    return d;
}

bool validate_decomposition(const ShuntDecomposition &d, const ComplexMatrix &a) {
    if (!a.square() || static_cast<int>(a.rows()) != d.dim) {
        throw std::invalid_argument("validate_decomposition: dimension mismatch");
    }
    ComplexMatrix sum(d.dim, d.dim);
    for (const auto &s : d.shunts) {
        for (int v = 0; v < d.dim; v++) {
            sum.at(s.map[v], v) += 1.0;
        }
    }
    for (int r = 0; r < d.dim; r++) {
        for (int c = 0; c < d.dim; c++) {
            if (sum.at(r, c) != a.at(c, r)) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix shift_matrix(const ShuntDecomposition &d) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(d.shunts.size());
    for (const auto &s : d.shunts) {
        blocks.push_back(s.matrix());
    }
    return numerics::direct_sum(blocks);
}

} // namespace walkforge::graphs
