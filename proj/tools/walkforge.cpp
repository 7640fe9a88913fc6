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

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "walkforge/passes.hpp"
#include "walkforge/report.hpp"
#include "walkforge/serialize.hpp"

namespace {

using namespace walkforge;

constexpr int kExitOk = 0;
constexpr int kExitCompareFailed = 1;
constexpr int kExitUsage = 2;

void add_topology_flags(CLI::App *cmd, report::TopologyRequest &req) {
    cmd->add_option("--topology", req.topology, "line, cycle, hypercube or complete");
    cmd->add_option("--nodes", req.nodes, "line: number of nodes (a power of two)");
    cmd->add_option("--k", req.k, "cycle: number of nodes (any k >= 3)");
    cmd->add_option("--dim", req.dim, "hypercube: dimension");
    cmd->add_option("--loops", req.loops, "hypercube: self-loop directions");
    cmd->add_option("--m", req.m, "complete: coin qubits (graph on 2^m vertices)");
    cmd->add_option("--variant", req.variant,
                    "cycle/line variant: full_controlled, j_reduced_nna, j_reduced_lra, "
                    "transposition_k");
    cmd->add_option("--ordering", req.ordering, "hypercube control ordering: gray or binary");
    cmd->add_option("--model", req.model, "complete-graph model: cnot or swap");
}

void write_output(const std::string &payload, const std::string &path) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw report::UsageError("cannot open output file: " + path);
    }
    file << payload;
}

walk::WalkConfig config_from(const report::ResolvedConfig &rc, int steps, int start_coin,
                             int start_position) {
    return walk::make_config(rc.topology, rc.coin, steps, start_coin, start_position, rc.options);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"walkforge: circuits and simulations for coined quantum walks built from "
                 "shunt-decomposed shift operators"};
    app.require_subcommand(1);

    report::TopologyRequest build_req;
    std::string build_format = "text";
    std::string build_out;
    CLI::App *build = app.add_subcommand("build", "emit a shift circuit");
    add_topology_flags(build, build_req);
    build->add_option("--format", build_format, "text or qasm");
    build->add_option("-o,--output", build_out, "output file (default stdout)");

    report::TopologyRequest walk_req;
    int walk_steps = 1;
    int walk_start_coin = 0;
    int walk_start_pos = 0;
    std::string walk_output = "json";
    std::string walk_out_file;
    std::string walk_source = "circuit";
    bool walk_full_register = false;
    int walk_shots = 0;
    unsigned long long walk_seed = 1;
    CLI::App *walk_cmd = app.add_subcommand("walk", "run a walk and emit distributions");
    add_topology_flags(walk_cmd, walk_req);
    walk_cmd->add_option("--coin", walk_req.coin, "hadamard, grover or identity");
    walk_cmd->add_option("--steps", walk_steps, "number of steps");
    walk_cmd->add_option("--start-coin", walk_start_coin, "initial coin basis state");
    walk_cmd->add_option("--start-position", walk_start_pos, "initial position basis state");
    walk_cmd->add_option("--source", walk_source, "circuit (gate-level) or operator (matrix)");
    walk_cmd->add_option("--output", walk_output, "json or csv");
    walk_cmd->add_option("-o,--output-file", walk_out_file, "output file (default stdout)");
    walk_cmd->add_flag("--full-register", walk_full_register,
                       "label outcomes with whole-register bitstrings (the coin register is "
                       "not measured and reads 0)");
    walk_cmd->add_option("--shots", walk_shots,
                         "sample this many shots from the exact final distribution "
                         "(post-processing, json only)");
    walk_cmd->add_option("--seed", walk_seed, "seed for --shots");

    report::TopologyRequest cmp_req;
    report::TopologyRequest cmp_b_req;
    int cmp_steps = 3;
    int cmp_start_coin = 0;
    int cmp_start_pos = 0;
    double cmp_tol = -1.0;
    CLI::App *cmp = app.add_subcommand(
        "compare", "run gate-level vs analytical walks and report the l1 distance per step");
    add_topology_flags(cmp, cmp_req);
    cmp->add_option("--coin", cmp_req.coin, "hadamard, grover or identity");
    cmp->add_option("--steps", cmp_steps, "number of steps");
    cmp->add_option("--start-coin", cmp_start_coin, "initial coin basis state");
    cmp->add_option("--start-position", cmp_start_pos, "initial position basis state");
    cmp->add_option("--tol", cmp_tol, "l1 tolerance (default WALKFORGE_TOL or 1e-10)");
    cmp->add_option("--b-topology", cmp_b_req.topology, "compare against this topology instead");
    cmp->add_option("--b-nodes", cmp_b_req.nodes, "side B line nodes");
    cmp->add_option("--b-k", cmp_b_req.k, "side B cycle nodes");
    cmp->add_option("--b-dim", cmp_b_req.dim, "side B hypercube dimension");
    cmp->add_option("--b-loops", cmp_b_req.loops, "side B hypercube self-loops");
    cmp->add_option("--b-m", cmp_b_req.m, "side B complete-graph coin qubits");
    cmp->add_option("--b-variant", cmp_b_req.variant, "side B variant");
    cmp->add_option("--b-ordering", cmp_b_req.ordering, "side B ordering");
    cmp->add_option("--b-model", cmp_b_req.model, "side B complete-graph model");
    cmp->add_option("--b-coin", cmp_b_req.coin, "side B coin");

    report::TopologyRequest stats_req;
    CLI::App *stats = app.add_subcommand("stats", "gate counts before/after optimization");
    add_topology_flags(stats, stats_req);

    report::TopologyRequest cyc_req;
    int cyc_tmax = 64;
    double cyc_tol = 1e-9;
    CLI::App *cyc = app.add_subcommand("cycle-length",
                                       "smallest T with U^T = I, searched up to --t-max");
    add_topology_flags(cyc, cyc_req);
    cyc->add_option("--coin", cyc_req.coin, "hadamard, grover or identity");
    cyc->add_option("--t-max", cyc_tmax, "search bound");
    cyc->add_option("--tol", cyc_tol, "matrix tolerance for U^T = I");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (build->parsed()) {
            report::ResolvedConfig rc = report::resolve(build_req);
            ir::Circuit circuit = builders::build_shift(rc.topology, rc.options);
            std::string payload;
            if (build_format == "text") {
                payload = ir::to_text(circuit);
            } else if (build_format == "qasm") {
                payload = ir::to_qasm(circuit);
            } else {
                throw report::UsageError("unknown --format '" + build_format + "'");
            }
            write_output(payload, build_out);
            return kExitOk;
        }
        if (walk_cmd->parsed()) {
            report::ResolvedConfig rc = report::resolve(walk_req);
            walk::WalkConfig cfg = config_from(rc, walk_steps, walk_start_coin, walk_start_pos);
            walk::Source source;
            if (walk_source == "circuit") {
                source = walk::Source::Circuit;
            } else if (walk_source == "operator") {
                source = walk::Source::Operator;
            } else {
                throw report::UsageError("unknown --source '" + walk_source + "'");
            }
            walk::View view =
                walk_full_register ? walk::View::FullRegister : walk::View::Position;
            walk::WalkResult result;
            try {
                result = walk::run_walk(cfg, source, view);
            } catch (const std::invalid_argument &e) {
                throw report::UsageError(e.what());
            }
            std::string payload;
            if (walk_output == "json") {
                std::optional<report::ShotsSpec> shots;
                if (walk_shots > 0) {
                    shots = report::ShotsSpec{walk_shots, walk_seed};
                }
                payload = report::walk_json(cfg, result, view, shots);
            } else if (walk_output == "csv") {
                if (walk_shots > 0) {
                    throw report::UsageError("--shots is only supported with --output json");
                }
                payload = report::walk_csv(cfg, result, view);
            } else {
                throw report::UsageError("unknown --output '" + walk_output + "'");
            }
            write_output(payload, walk_out_file);
            return kExitOk;
        }
        if (cmp->parsed()) {
            report::ResolvedConfig rc = report::resolve(cmp_req);
            walk::WalkConfig cfg = config_from(rc, cmp_steps, cmp_start_coin, cmp_start_pos);
            std::optional<walk::WalkConfig> cfg_b;
            bool b_given = !cmp_b_req.topology.empty() || cmp_b_req.nodes >= 0 ||
                           cmp_b_req.k >= 0 || cmp_b_req.dim >= 0 || cmp_b_req.m >= 0 ||
                           !cmp_b_req.variant.empty() || !cmp_b_req.ordering.empty() ||
                           !cmp_b_req.model.empty() || !cmp_b_req.coin.empty();
            if (b_given) {
                report::TopologyRequest merged = cmp_req;
                if (!cmp_b_req.topology.empty()) {
                    // A fresh topology resets the size flags to side B's.
                    merged = cmp_b_req;
                } else {
                    if (cmp_b_req.nodes >= 0) merged.nodes = cmp_b_req.nodes;
                    if (cmp_b_req.k >= 0) merged.k = cmp_b_req.k;
                    if (cmp_b_req.dim >= 0) merged.dim = cmp_b_req.dim;
                    if (cmp_b_req.loops > 0) merged.loops = cmp_b_req.loops;
                    if (cmp_b_req.m >= 0) merged.m = cmp_b_req.m;
                    if (!cmp_b_req.variant.empty()) merged.variant = cmp_b_req.variant;
                    if (!cmp_b_req.ordering.empty()) merged.ordering = cmp_b_req.ordering;
                    if (!cmp_b_req.model.empty()) merged.model = cmp_b_req.model;
                    if (!cmp_b_req.coin.empty()) merged.coin = cmp_b_req.coin;
                }
                if (merged.coin.empty()) {
                    merged.coin = cmp_req.coin;
                }
                report::ResolvedConfig rb = report::resolve(merged);
                cfg_b = config_from(rb, cmp_steps, cmp_start_coin, cmp_start_pos);
            }
            double tol = cmp_tol >= 0 ? cmp_tol : report::default_tolerance();
            report::CompareOutcome outcome = report::run_compare(cfg, cfg_b, tol);
            std::cout << outcome.json(cfg);
            return outcome.pass ? kExitOk : kExitCompareFailed;
        }
        if (stats->parsed()) {
            report::ResolvedConfig rc = report::resolve(stats_req);
            std::cout << report::stats_table(rc);
            return kExitOk;
        }
        if (cyc->parsed()) {
            report::ResolvedConfig rc = report::resolve(cyc_req);
            walk::WalkConfig cfg = config_from(rc, 0, 0, 0);
            std::optional<int> t = walk::cycle_length(cfg, cyc_tmax, cyc_tol);
            if (t) {
                std::cout << *t << "\n";
            } else {
                std::cout << "none within " << cyc_tmax << "\n";
            }
            return kExitOk;
        }
    } catch (const report::UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
