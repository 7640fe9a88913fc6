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

#include "walkforge/passes.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>

namespace walkforge::ir {

namespace {

bool touches(const Gate &g, int qubit) {
    auto qs = gate_qubits(g);
    return std::find(qs.begin(), qs.end(), qubit) != qs.end();
}

// X-like gates are plain X and MCX; their action is target ^= f(controls).
struct XLike {
    std::vector<Control> controls;
    int target;
};

std::optional<XLike> as_xlike(const Gate &g) {
    if (const auto *x = std::get_if<XGate>(&g)) {
        return XLike{{}, x->target};
    }
    if (const auto *m = std::get_if<MCXGate>(&g)) {
        return XLike{m->controls, m->target};
    }
    return std::nullopt;
}

// Conservative commutation test. Two X-like gates commute whenever neither
// target sits in the other's control set; anything else commutes only when
// the qubit sets are disjoint.
bool commutes(const Gate &a, const Gate &b) {
    auto xa = as_xlike(a);
    auto xb = as_xlike(b);
    if (xa && xb) {
        for (const auto &c : xb->controls) {
            if (c.qubit == xa->target) {
                return false;
            }
        }
        for (const auto &c : xa->controls) {
            if (c.qubit == xb->target) {
                return false;
            }
        }
        return true;
    }
    auto qa = gate_qubits(a);
    auto qb = gate_qubits(b);
    for (int q : qa) {
        if (std::find(qb.begin(), qb.end(), q) != qb.end()) {
            return false;
        }
    }
    return true;
}

// Same target, same control qubits, exactly one polarity flipped: the
// merged gate drops the differing control.
std::optional<Gate> merge_pair(const XLike &a, const XLike &b) {
    if (a.target != b.target || a.controls.size() != b.controls.size()) {
        return std::nullopt;
    }
    int differing = -1;
    std::vector<Control> kept;
    for (const auto &ca : a.controls) {
        auto it = std::find_if(b.controls.begin(), b.controls.end(),
                               [&](const Control &cb) { return cb.qubit == ca.qubit; });
        if (it == b.controls.end()) {
            return std::nullopt;
        }
        if (it->polarity == ca.polarity) {
            kept.push_back(ca);
        } else if (differing == -1) {
            differing = ca.qubit;
        } else {
            return std::nullopt;
        }
    }
    if (differing == -1) {
        return std::nullopt;
    }
    if (kept.empty()) {
        return Gate{XGate{a.target}};
    }
    return Gate{MCXGate{kept, a.target}};
}

std::vector<Control> negatives_of(const std::vector<Control> &controls) {
    std::vector<Control> out;
    for (const auto &c : controls) {
        if (c.polarity == Polarity::Negative) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<Control> all_positive(const std::vector<Control> &controls) {
    std::vector<Control> out = controls;
    for (auto &c : out) {
        c.polarity = Polarity::Positive;
    }
    return out;
}

} // namespace

Circuit lower_polarities(const Circuit &c) {
    Circuit out{c.position_qubits, c.coin_qubits, {}};
    for (const auto &g : c.gates) {
        std::vector<Control> negs;
        Gate positive = g;
        if (const auto *m = std::get_if<MCXGate>(&g)) {
            negs = negatives_of(m->controls);
            positive = MCXGate{all_positive(m->controls), m->target};
        } else if (const auto *s = std::get_if<MCSwapGate>(&g)) {
            negs = negatives_of(s->controls);
            positive = MCSwapGate{all_positive(s->controls), s->a, s->b};
        }
        if (negs.empty()) {
            out.append(g);
            continue;
        }
        for (const auto &n : negs) {
            out.append(XGate{n.qubit});
        }
        out.append(positive);
        for (auto it = negs.rbegin(); it != negs.rend(); ++it) {
            out.append(XGate{it->qubit});
        }
    }
    return out;
}

Circuit cancel_adjacent_x(const Circuit &c) {
    std::vector<Gate> gates = c.gates;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gates.size() && !changed; i++) {
            const auto *x = std::get_if<XGate>(&gates[i]);
            if (x == nullptr) {
                continue;
            }
            for (std::size_t j = i + 1; j < gates.size(); j++) {
                const auto *y = std::get_if<XGate>(&gates[j]);
                if (y != nullptr && y->target == x->target) {
                    gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
                    gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                    break;
                }
                if (touches(gates[j], x->target)) {
                    break;
                }
            }
        }
    }
    return Circuit{c.position_qubits, c.coin_qubits, std::move(gates)};
}

std::vector<Gate> split_multi_target(const std::vector<Control> &controls,
                                     const std::vector<int> &targets) {
    for (int t : targets) {
        for (const auto &c : controls) {
            if (c.qubit == t) {
                throw std::invalid_argument("split_multi_target: control collides with target");
            }
        }
    }
    std::vector<Gate> out;
    out.reserve(targets.size());
    for (int t : targets) {
        out.push_back(MCXGate{controls, t});
    }
    return out;
}

Circuit merge_control_pairs(const Circuit &c) {
    std::vector<Gate> gates = c.gates;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gates.size() && !changed; i++) {
            auto xi = as_xlike(gates[i]);
            if (!xi || xi->controls.empty()) {
                continue;
            }
            for (std::size_t j = i + 1; j < gates.size(); j++) {
                auto xj = as_xlike(gates[j]);
                if (xj) {
                    if (auto merged = merge_pair(*xi, *xj)) {
                        gates[i] = *merged;
                        gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
                        changed = true;
                        break;
                    }
                }
                // Gate j may only move next to gate i past commuting gates.
                if (!commutes(gates[i], gates[j])) {
                    break;
                }
            }
        }
    }
    return Circuit{c.position_qubits, c.coin_qubits, std::move(gates)};
}

std::vector<Gate> decompose_mcswap(const MCSwapGate &g) {
    std::vector<Control> inner = g.controls;
    inner.push_back(Control{g.a, Polarity::Positive});
    return {
        MCXGate{{Control{g.b, Polarity::Positive}}, g.a},
        MCXGate{std::move(inner), g.b},
        MCXGate{{Control{g.b, Polarity::Positive}}, g.a},
    };
}

Circuit decompose_mcswaps(const Circuit &c) {
    Circuit out{c.position_qubits, c.coin_qubits, {}};
    for (const auto &g : c.gates) {
        if (const auto *s = std::get_if<MCSwapGate>(&g)) {
            for (auto &piece : decompose_mcswap(*s)) {
                out.append(std::move(piece));
            }
        } else {
            out.append(g);
        }
    }
    return out;
}

Circuit optimize(const Circuit &c) {
    // Circuits cannot hold multi-target gates, so the split stage has
    // nothing to do here; it participates at construction time.
    Circuit merged = merge_control_pairs(c);
    Circuit lowered = lower_polarities(merged);
    return cancel_adjacent_x(lowered);
}

} // namespace walkforge::ir
