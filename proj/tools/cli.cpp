/*
Copyright 2026 The kssparse Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "kssparse/certify.hpp"
#include "kssparse/general_sparsifier.hpp"
#include "kssparse/graph_io.hpp"
#include "kssparse/leverage.hpp"
#include "kssparse/linalg.hpp"
#include "kssparse/partition.hpp"
#include "kssparse/report.hpp"

namespace kss::cli {

namespace {

using report::json;

void write_json(const json& doc, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + path + "'");
    file << doc.dump(2) << '\n';
}

struct LeverageArgs {
    std::string graph;
    std::string json_path;
};

int cmd_leverage(const LeverageArgs& a, std::ostream& out) {
    const WeightedGraph g = read_graph(a.graph);
    const LeverageProfile p = leverage_scores(g);
    fmt::print(out, "{:>6} {:>6} {:>6} {:>14} {:>14}\n", "edge", "u", "v", "weight", "leverage");
    for (std::size_t e = 0; e < g.m(); ++e) {
        const Edge& edge = g.edges()[e];
        fmt::print(out, "{:>6} {:>6} {:>6} {:>14.8g} {:>14.10f}\n", e, edge.u, edge.v, edge.weight, p.scores[e]);
    }
    fmt::print(out, "max {:.10f} (edge {})\n", p.max, p.argmax);
    fmt::print(out, "sum {:.10f}\n", p.sum);
    fmt::print(out, "n - components {} ({} - {})\n", p.n - p.components, p.n, p.components);
    if (!a.json_path.empty()) write_json(report::leverage_document(p), a.json_path);
    return kOk;
}

struct PartitionArgs {
    std::string graph;
    std::string method = "brute";
    std::uint64_t budget = 1024;
    std::uint64_t seed = 0;
    std::size_t cap = kDefaultBruteForceCap;
    std::size_t threads = 0;
    std::string json_path;
};

int cmd_partition(const PartitionArgs& a, std::ostream& out) {
    const WeightedGraph g = read_graph(a.graph);
    const PartitionMethod method = parse_partition_method(a.method);
    Partitioner partitioner{method, a.budget, a.seed, a.cap, a.threads};
    const PartitionResult p = method == PartitionMethod::Random ? random_partition(g, a.budget, a.seed)
                                                                : partitioner(g, 0);
    fmt::print(out, "method {}\n", to_string(p.method));
    fmt::print(out, "side");
    for (int s : p.side) fmt::print(out, " {}", s);
    fmt::print(out, "\n");
    fmt::print(out, "edges per side {} / {}\n", p.count(1), p.count(2));
    fmt::print(out, "deviation {:.12f}\n", p.deviation);
    fmt::print(out, "R1 eigenvalues [{:.12f}, {:.12f}]\n", p.r_min, p.r_max);
    fmt::print(out, "alpha {:.12f}\n", p.alpha);
    fmt::print(out, "bound 5*sqrt(alpha) {:.12f}{}\n", p.theoretical_bound, p.bound_vacuous ? " (vacuous: >= 1/2)" : "");
    fmt::print(out, "satisfied {}\n", p.satisfied_bound ? "yes" : "no");
    if (!a.json_path.empty()) write_json(report::partition_document(p, a.seed), a.json_path);
    return kOk;
}

struct SparsifyArgs {
    std::string graph;
    double epsilon = 0.5;
    std::string mode = "relaxed";
    std::optional<double> delta_t;
    std::optional<std::size_t> target_size;
    std::string method = "random";
    std::uint64_t budget = 1024;
    std::uint64_t seed = 0;
    std::size_t cap = kDefaultBruteForceCap;
    std::string out_path;
    std::string report_path;
    bool no_global = false;
    bool timing = false;
};

int cmd_sparsify(const SparsifyArgs& a, std::ostream& out, std::ostream& err) {
    const Mode mode = parse_mode(a.mode);
    if (mode == Mode::Strict && (a.delta_t || a.target_size)) {
        fmt::print(err, "error: strict mode does not accept --delta-t or --target-size\n");
        return kInfeasible;
    }
    const WeightedGraph g = read_graph(a.graph);

    GeneralOptions options;
    options.epsilon = a.epsilon;
    options.mode = mode;
    options.partitioner = {parse_partition_method(a.method), a.budget, a.seed, a.cap, 0};
    options.delta_final = a.delta_t;
    options.target_size = a.target_size;
    options.track_global = !a.no_global;

    const auto start = std::chrono::steady_clock::now();
    GeneralResult result;
    try {
        result = sparsify_general(g, options);
    } catch (const InfeasibleError& e) {
        fmt::print(err, "infeasible: {}\n", e.what());
        fmt::print(err, "first violated inequality: {}\n", e.inequality());
        return kInfeasible;
    }
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    const RunReport& r = result.report;
    if (!a.out_path.empty()) write_graph(result.graph, a.out_path);
    if (!a.report_path.empty())
        write_json(report::to_json(r, a.timing ? std::optional<double>(wall_ms) : std::nullopt), a.report_path);

    fmt::print(out, "mode {}\n", to_string(r.mode));
    fmt::print(out, "edges {} -> {} in {} step(s) ({})\n", r.m, r.final_edges, r.steps.size(), r.stop_reason);
    fmt::print(out, "certificate a {:.12f} b {:.12f} kernel_match {}\n", r.certificate.lower, r.certificate.upper,
               r.certificate.kernel_match ? "true" : "false");
    fmt::print(out, "epsilon_measured {:.12f}\n", r.certificate.epsilon());
    if (a.timing) fmt::print(out, "wall_time_ms {:.1f}\n", wall_ms);

    if (mode == Mode::Strict) return certifies(r.certificate, a.epsilon) ? kOk : kVerificationFailed;
    return kOk;
}

struct VerifyArgs {
    std::string graph_g;
    std::string graph_h;
    double epsilon = 0.1;
    std::string convention = "linear";
    std::string json_path;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const WeightedGraph g = read_graph(a.graph_g);
    const WeightedGraph h = read_graph(a.graph_h);
    if (g.n() != h.n()) {
        fmt::print(err, "error: vertex counts differ ({} vs {})\n", g.n(), h.n());
        return kInfeasible;
    }
    if (!(a.epsilon > 0.0)) {
        fmt::print(err, "error: --epsilon must be positive\n");
        return kInfeasible;
    }
    const Convention convention = a.convention == "exp" ? Convention::Exponential : Convention::Linear;
    const ApproxCertificate cert = approx_factors(g, h);
    const bool ok = certifies(cert, a.epsilon, convention);
    json doc = report::certificate_document(cert, a.epsilon, ok);
    doc["convention"] = to_string(convention);
    out << doc.dump(2) << '\n';
    if (!a.json_path.empty()) write_json(doc, a.json_path);
    return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral sparsification by recursive two-way edge partitioning", "kssparse"};
    app.require_subcommand(1);

    LeverageArgs lev;
    auto* leverage = app.add_subcommand("leverage", "Print per-edge leverage scores");
    leverage->add_option("graph", lev.graph, "Graph file")->required();
    leverage->add_option("--json", lev.json_path, "Write a JSON document to this path");

    PartitionArgs part;
    auto* partition = app.add_subcommand("partition", "Find a balanced two-way edge partition");
    partition->add_option("graph", part.graph, "Graph file")->required();
    partition->add_option("--method", part.method, "brute | random | auto")
        ->check(CLI::IsMember({"brute", "random", "auto"}));
    partition->add_option("--budget", part.budget, "Samples for the random method")->check(CLI::PositiveNumber);
    partition->add_option("--seed", part.seed, "Random seed");
    partition->add_option("--cap", part.cap, "Largest edge count for brute force");
    partition->add_option("--threads", part.threads, "Brute-force worker threads (0: all cores)");
    partition->add_option("--json", part.json_path, "Write a JSON document to this path");

    SparsifyArgs sp;
    auto* sparsify = app.add_subcommand("sparsify", "Sparsify a graph and certify the result");
    sparsify->add_option("graph", sp.graph, "Graph file")->required();
    sparsify->add_option("--epsilon", sp.epsilon, "Target approximation factor in (0, 1)");
    sparsify->add_option("--mode", sp.mode, "strict | relaxed")->check(CLI::IsMember({"strict", "relaxed"}));
    sparsify->add_option("--delta-t", sp.delta_t, "Final delta of the schedule (relaxed only)");
    sparsify->add_option("--target-size", sp.target_size, "Stop at this many edges (relaxed only)");
    sparsify->add_option("--method", sp.method, "brute | random | auto")
        ->check(CLI::IsMember({"brute", "random", "auto"}));
    sparsify->add_option("--budget", sp.budget, "Samples per random partition")->check(CLI::PositiveNumber);
    sparsify->add_option("--seed", sp.seed, "Random seed");
    sparsify->add_option("--cap", sp.cap, "Largest edge count for brute force");
    sparsify->add_option("--out", sp.out_path, "Write the sparsified graph here");
    sparsify->add_option("--report", sp.report_path, "Write the JSON run report here");
    sparsify->add_flag("--no-global", sp.no_global, "Only track leverage along the selected path");
    sparsify->add_flag("--timing", sp.timing, "Include wall time in output and report");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Certify H as a spectral approximation of G");
    verify->add_option("G", ver.graph_g, "Reference graph file")->required();
    verify->add_option("H", ver.graph_h, "Candidate graph file")->required();
    verify->add_option("--epsilon", ver.epsilon, "Approximation factor to certify");
    verify->add_option("--convention", ver.convention, "linear | exp")->check(CLI::IsMember({"linear", "exp"}));
    verify->add_option("--json", ver.json_path, "Also write the certificate to this path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInfeasible;
    }

    try {
        if (leverage->parsed()) return cmd_leverage(lev, out);
        if (partition->parsed()) return cmd_partition(part, out);
        if (sparsify->parsed()) return cmd_sparsify(sp, out, err);
        if (verify->parsed()) return cmd_verify(ver, out, err);
    } catch (const GraphFormatError& e) {
        err << "error: " << e.what() << '\n';
        return kInfeasible;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const PartitionError& e) {
        err << "partition failure: " << e.what() << '\n';
        return kSearchFailure;
    } catch (const ConvergenceError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kSearchFailure;
    } catch (const std::exception& e) {
        // Unreadable files, invalid parameters.
        err << "error: " << e.what() << '\n';
        return kInfeasible;
    }
    return kInfeasible;
}

}  // namespace kss::cli
