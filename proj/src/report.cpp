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

#include "walkforge/report.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "walkforge/passes.hpp"

namespace walkforge::report {

namespace {

using nlohmann::json;

bool is_pow2(int v) {
    return v > 0 && (v & (v - 1)) == 0;
}

builders::CycleVariant parse_variant(const std::string &name) {
    if (name == "full_controlled") {
        return builders::CycleVariant::FullControlled;
    }
    if (name == "j_reduced_nna") {
        return builders::CycleVariant::JReducedNna;
    }
    if (name == "j_reduced_lra") {
        return builders::CycleVariant::JReducedLra;
    }
    if (name == "transposition_k") {
        return builders::CycleVariant::TranspositionK;
    }
    throw UsageError("unknown variant '" + name +
                     "' (expected full_controlled, j_reduced_nna, j_reduced_lra or "
                     "transposition_k)");
}

walk::CoinKind parse_coin(const std::string &name) {
    if (name == "hadamard") {
        return walk::CoinKind::Hadamard;
    }
    if (name == "grover") {
        return walk::CoinKind::Grover;
    }
    if (name == "identity") {
        return walk::CoinKind::Identity;
    }
    throw UsageError("unknown coin '" + name + "' (expected hadamard, grover or identity)");
}

json distribution_labels(const walk::Distribution &d, walk::View view, int total_qubits) {
    json labels = json::array();
    for (long long l : d.labels) {
        if (view == walk::View::FullRegister) {
            labels.push_back(format_label(l, view, total_qubits));
        } else {
            labels.push_back(l);
        }
    }
    return labels;
}

} // namespace

ResolvedConfig resolve(const TopologyRequest &req) {
    ResolvedConfig out;
    builders::BuilderOptions &opt = out.options;

    if (req.topology == "line") {
        if (req.nodes < 0) {
            throw UsageError("line topology needs --nodes");
        }
        out.topology = graphs::Line{req.nodes};
    } else if (req.topology == "cycle") {
        if (req.k < 0) {
            throw UsageError("cycle topology needs --k");
        }
        out.topology = graphs::Cycle{req.k};
    } else if (req.topology == "hypercube") {
        if (req.dim < 0) {
            throw UsageError("hypercube topology needs --dim (and optionally --loops)");
        }
        out.topology = graphs::Hypercube{req.dim, req.loops};
    } else if (req.topology == "complete") {
        if (req.m < 0) {
            throw UsageError("complete topology needs --m (graph on 2^m vertices)");
        }
        out.topology = graphs::Complete{req.m >= 31 ? -1 : (1 << req.m)};
    } else if (req.topology.empty()) {
        throw UsageError("missing --topology (line, cycle, hypercube or complete)");
    } else {
        throw UsageError("unknown topology '" + req.topology + "'");
    }
    try {
        graphs::validate(out.topology);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }

    if (!req.variant.empty()) {
        opt.cycle_variant = parse_variant(req.variant);
        if (const auto *c = std::get_if<graphs::Cycle>(&out.topology)) {
            if (!is_pow2(c->nodes) && opt.cycle_variant != builders::CycleVariant::TranspositionK) {
                throw UsageError("--k " + std::to_string(c->nodes) + " with --variant " +
                                 req.variant +
                                 ": a cycle whose length is not a power of two can only be "
                                 "built from adjacent transpositions; drop --variant or use "
                                 "transposition_k");
            }
        }
    } else if (const auto *c = std::get_if<graphs::Cycle>(&out.topology)) {
        opt.cycle_variant = is_pow2(c->nodes) ? builders::CycleVariant::JReducedLra
                                              : builders::CycleVariant::TranspositionK;
    }

    if (!req.ordering.empty()) {
        if (req.ordering == "gray") {
            opt.hypercube_ordering = builders::HypercubeOrdering::Gray;
        } else if (req.ordering == "binary") {
            opt.hypercube_ordering = builders::HypercubeOrdering::Binary;
        } else {
            throw UsageError("unknown ordering '" + req.ordering + "' (expected gray or binary)");
        }
    }

    if (!req.model.empty()) {
        if (req.model == "cnot") {
            opt.complete_model = builders::CompleteModel::Cnot;
        } else if (req.model == "swap") {
            opt.complete_model = builders::CompleteModel::Swap;
        } else {
            throw UsageError("unknown model '" + req.model + "' (expected cnot or swap)");
        }
    }

    out.coin = req.coin.empty() ? walk::default_coin(out.topology) : parse_coin(req.coin);
    return out;
}

std::string variant_name(builders::CycleVariant v) {
    switch (v) {
        case builders::CycleVariant::FullControlled:
            return "full_controlled";
        case builders::CycleVariant::JReducedNna:
            return "j_reduced_nna";
        case builders::CycleVariant::JReducedLra:
            return "j_reduced_lra";
        case builders::CycleVariant::TranspositionK:
            return "transposition_k";
    }
    return "?";
}

std::string coin_name(walk::CoinKind k) {
    switch (k) {
        case walk::CoinKind::Hadamard:
            return "hadamard";
        case walk::CoinKind::Grover:
            return "grover";
        case walk::CoinKind::Identity:
            return "identity";
    }
    return "?";
}

std::string format_label(long long label, walk::View view, int total_qubits) {
    if (view == walk::View::Position) {
        return std::to_string(label);
    }
    std::string bits(total_qubits, '0');
    for (int b = 0; b < total_qubits; b++) {
        if ((label >> b) & 1) {
            bits[total_qubits - 1 - b] = '1';
        }
    }
    return bits;
}

std::string walk_json(const walk::WalkConfig &cfg, const walk::WalkResult &result,
                      walk::View view, const std::optional<ShotsSpec> &shots) {
    int total_qubits =
        graphs::position_qubits(cfg.topology) + graphs::coin_qubits(cfg.topology);
    json j;
    j["topology"] = graphs::describe(cfg.topology);
    j["coin"] = coin_name(cfg.coin.kind);
    j["steps"] = cfg.steps;
    j["labels"] = distribution_labels(result.per_step.front(), view, total_qubits);
    json steps = json::array();
    for (const auto &d : result.per_step) {
        steps.push_back(d.probs);
    }
    j["probs_per_step"] = steps;
    if (shots && shots->shots > 0) {
        // Post-processing only: samples drawn from the exact final-step
        // distribution with a fixed seed.
        const auto &final_dist = result.per_step.back();
        std::mt19937_64 rng(shots->seed);
        std::discrete_distribution<std::size_t> pick(final_dist.probs.begin(),
                                                     final_dist.probs.end());
        std::map<std::string, int> counts;
        for (int s = 0; s < shots->shots; s++) {
            std::size_t i = pick(rng);
            counts[format_label(final_dist.labels[i], view, total_qubits)]++;
        }
        json sampled;
        sampled["shots"] = shots->shots;
        sampled["seed"] = shots->seed;
        sampled["counts"] = counts;
        j["sampled"] = sampled;
    }
    return j.dump(2) + "\n";
}

std::string walk_csv(const walk::WalkConfig &cfg, const walk::WalkResult &result,
                     walk::View view) {
    int total_qubits =
        graphs::position_qubits(cfg.topology) + graphs::coin_qubits(cfg.topology);
    std::ostringstream os;
    os << "step,label,prob\n";
    os << std::setprecision(17);
    for (std::size_t t = 0; t < result.per_step.size(); t++) {
        const auto &d = result.per_step[t];
        for (std::size_t i = 0; i < d.labels.size(); i++) {
            os << t << ',' << format_label(d.labels[i], view, total_qubits) << ',' << d.probs[i]
               << '\n';
        }
    }
    return os.str();
}

CompareOutcome run_compare(const walk::WalkConfig &a, const std::optional<walk::WalkConfig> &b,
                           double tol) {
    auto start = std::chrono::steady_clock::now();
    CompareOutcome out;
    out.tolerance = tol;
    walk::WalkResult ra = walk::run_walk(a, walk::Source::Circuit);
    walk::WalkResult rb = b ? walk::run_walk(*b, walk::Source::Circuit)
                            : walk::run_walk(a, walk::Source::Operator);
    if (ra.per_step.size() != rb.per_step.size()) {
        throw UsageError("compare: step counts differ");
    }
    for (std::size_t t = 0; t < ra.per_step.size(); t++) {
        double l1;
        try {
            l1 = walk::l1_distance(ra.per_step[t], rb.per_step[t]);
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("compare: ") + e.what());
        }
        out.l1_per_step.push_back(l1);
        out.max_l1 = std::max(out.max_l1, l1);
    }
    out.pass = out.max_l1 <= tol;
    out.per_step = std::move(ra.per_step);
    out.stats = ir::gate_stats(builders::build_shift(a.topology, a.options));
    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
    return out;
}

std::string CompareOutcome::json(const walk::WalkConfig &cfg) const {
    nlohmann::json j;
    j["topology"] = graphs::describe(cfg.topology);
    j["coin"] = coin_name(cfg.coin.kind);
    j["steps"] = cfg.steps;
    j["variant"] = variant_name(cfg.options.cycle_variant);
    j["ordering"] = cfg.options.hypercube_ordering == builders::HypercubeOrdering::Gray
                        ? "gray"
                        : "binary";
    j["model"] =
        cfg.options.complete_model == builders::CompleteModel::Cnot ? "cnot" : "swap";
    if (!per_step.empty()) {
        nlohmann::json labels = nlohmann::json::array();
        for (long long l : per_step.front().labels) {
            labels.push_back(l);
        }
        j["labels"] = labels;
        nlohmann::json steps = nlohmann::json::array();
        for (const auto &d : per_step) {
            steps.push_back(d.probs);
        }
        j["probs_per_step"] = steps;
    }
    j["l1_per_step"] = l1_per_step;
    j["max_l1"] = max_l1;
    j["tolerance"] = tolerance;
    j["pass"] = pass;
    j["gate_stats"] = {{"total", stats.total},
                       {"by_kind", stats.by_kind},
                       {"cnot_equivalent", stats.cnot_equivalent}};
    j["wall_ms"] = wall_ms;
    return j.dump(2) + "\n";
}

double default_tolerance() {
    if (const char *env = std::getenv("WALKFORGE_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception &) {
            throw UsageError("WALKFORGE_TOL is not a number");
        }
    }
    return 1e-10;
}

namespace {

std::string kind_summary(const ir::GateStats &s) {
    std::string out;
    for (const auto &[kind, count] : s.by_kind) {
        if (!out.empty()) {
            out += ' ';
        }
        out += kind + ":" + std::to_string(count);
    }
    return out.empty() ? "-" : out;
}

void stats_rows(std::ostream &os, const std::string &name, const ir::Circuit &c) {
    ir::Circuit optimized = ir::optimize(c);
    ir::GateStats before = ir::gate_stats(c);
    ir::GateStats after = ir::gate_stats(optimized);
    os << std::left << std::setw(34) << name << std::setw(7) << before.total << std::setw(12)
       << before.cnot_equivalent << std::setw(7) << after.total << std::setw(12)
       << after.cnot_equivalent << kind_summary(after) << '\n';
}

int x_count(const ir::Circuit &c) {
    auto stats = ir::gate_stats(c);
    auto it = stats.by_kind.find("X");
    return it == stats.by_kind.end() ? 0 : it->second;
}

} // namespace

std::string stats_table(const ResolvedConfig &cfg) {
    std::ostringstream os;
    os << std::left << std::setw(34) << "circuit" << std::setw(7) << "gates" << std::setw(12)
       << "cnot-equiv" << std::setw(7) << "opt" << std::setw(12) << "opt-cnot-eq"
       << "opt-kinds\n";
    std::string tag = graphs::describe(cfg.topology);
    std::visit(
        [&](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, graphs::Complete>) {
                int m = graphs::coin_qubits(cfg.topology);
                stats_rows(os, tag + " cnot",
                           builders::build_complete_shift(m, builders::CompleteModel::Cnot));
                stats_rows(os, tag + " swap",
                           builders::build_complete_shift(m, builders::CompleteModel::Swap));
                stats_rows(os, tag + " full network", builders::build_complete_full_network(m));
            } else if constexpr (std::is_same_v<T, graphs::Hypercube>) {
                ir::Circuit gray = builders::build_hypercube_shift(
                    g.dimension, g.self_loops, builders::HypercubeOrdering::Gray);
                ir::Circuit binary = builders::build_hypercube_shift(
                    g.dimension, g.self_loops, builders::HypercubeOrdering::Binary);
                stats_rows(os, tag + " gray", gray);
                stats_rows(os, tag + " binary", binary);
                int gx = x_count(ir::optimize(gray));
                int bx = x_count(ir::optimize(binary));
                os << "x-count after lowering+cancellation: gray=" << gx << " binary=" << bx
                   << " delta=" << (bx - gx) << '\n';
            } else if constexpr (std::is_same_v<T, graphs::Cycle>) {
                bool pow2 = (g.nodes & (g.nodes - 1)) == 0;
                if (pow2) {
                    int n = graphs::position_qubits(cfg.topology);
                    stats_rows(os, tag + " full_controlled",
                               builders::build_cycle_shift(n, builders::CycleVariant::FullControlled));
                    stats_rows(os, tag + " j_reduced_nna",
                               builders::build_cycle_shift(n, builders::CycleVariant::JReducedNna));
                    stats_rows(os, tag + " j_reduced_lra",
                               builders::build_cycle_shift(n, builders::CycleVariant::JReducedLra));
                }
                if (g.nodes >= 3) {
                    stats_rows(os, tag + " transposition_k", builders::build_k_cycle_shift(g.nodes));
                }
            } else {
                int n = graphs::position_qubits(cfg.topology);
                stats_rows(os, tag + " full_controlled",
                           builders::build_line_walk_circuit(n, builders::CycleVariant::FullControlled));
                stats_rows(os, tag + " j_reduced_nna",
                           builders::build_line_walk_circuit(n, builders::CycleVariant::JReducedNna));
                stats_rows(os, tag + " j_reduced_lra",
                           builders::build_line_walk_circuit(n, builders::CycleVariant::JReducedLra));
            }
        },
        cfg.topology);
    return os.str();
}

} // namespace walkforge::report
