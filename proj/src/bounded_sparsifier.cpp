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

#include "kssparse/bounded_sparsifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "kssparse/leverage.hpp"

namespace kss {

std::string_view to_string(Mode m) { return m == Mode::Strict ? "strict" : "relaxed"; }

Mode parse_mode(std::string_view name) {
    if (name == "strict") return Mode::Strict;
    if (name == "relaxed") return Mode::Relaxed;
    throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

const StrictConstants& strict_constants() {
    static const StrictConstants constants{3.0 + std::sqrt(6.0), 1.0 / 900.0};
    return constants;
}

namespace {

std::string num(double x) {
    std::ostringstream out;
    out.precision(6);
    out << x;
    return out.str();
}

// Relative slack for comparing a measured leverage against its bound.
constexpr double kBoundSlack = 1e-12;
constexpr double kEnvelopeSlack = 1e-12;  // relative, on measured leverages

}  // namespace

int recursion_depth(double gamma, double delta, Mode mode) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be positive");
    if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("delta must be positive");
    if (mode == Mode::Strict && delta > strict_constants().small_leverage)
        throw InfeasibleError("delta <= 1/900", "delta = " + num(delta));
    if (mode == Mode::Relaxed && delta >= kRelaxedDeltaLimit)
        throw InfeasibleError("delta < 1/4", "delta = " + num(delta));
    if (gamma > delta * (1.0 + kBoundSlack))
        throw InfeasibleError("gamma <= delta", "gamma = " + num(gamma) + ", delta = " + num(delta));
    const double headroom = std::log2(1.0 / gamma) - std::log2(2.0 / delta);
    if (headroom < 0.0) return 0;
    return static_cast<int>(std::floor(headroom + 1e-9));
}

namespace {

std::uint64_t stream_id(std::uint64_t base, int level, std::size_t index) {
    return base * 0x100000001B3ULL + (static_cast<std::uint64_t>(level) << 32) + index;
}

double max_leverage(const WeightedGraph& g) { return g.m() == 0 ? 0.0 : leverage_scores(g).max; }

}  // namespace

BoundedResult sparsify_bounded(const WeightedGraph& g, const BoundedOptions& options) {
    SparsifyTrace trace;
    trace.mode = options.mode;
    trace.delta = options.delta;
    trace.global_tracking = options.track_global;

    if (g.m() == 0) {
        trace.notes.push_back("empty graph: nothing to partition");
        return {g, trace, approx_factors(g, g)};
    }

    const double gamma = leverage_scores(g).max;
    trace.gamma = gamma;
    trace.rho = gamma * static_cast<double>(g.m()) / static_cast<double>(g.n());
    trace.gamma_bound = options.gamma_bound.value_or(gamma);

    if (gamma > options.delta * (1.0 + kBoundSlack)) {
        if (options.mode == Mode::Strict)
            throw InfeasibleError("l_0 <= delta", "max leverage " + num(gamma) + " exceeds delta " + num(options.delta));
        trace.notes.push_back("max leverage " + num(gamma) + " exceeds delta " + num(options.delta));
    }

    if (options.depth) {
        if (*options.depth < 0) throw std::invalid_argument("depth must be non-negative");
        trace.depth = *options.depth;
        try {
            trace.formula_depth = recursion_depth(trace.gamma_bound, options.delta, options.mode);
        } catch (const InfeasibleError& e) {
            if (options.mode == Mode::Strict) throw;
            trace.notes.push_back(std::string("depth formula not applicable: ") + e.what());
        }
    } else {
        trace.depth = recursion_depth(trace.gamma_bound, options.delta, options.mode);
        trace.formula_depth = trace.depth;
    }

    trace.path_leverage.push_back(gamma);
    trace.global_leverage.push_back(gamma);
    trace.theoretical_log_factor = 10.0 * std::sqrt(gamma);

    if (trace.depth == 0) {
        trace.notes.push_back("t = 0: no partitioning headroom, input returned unchanged");
        return {g, trace, approx_factors(g, g)};
    }

    WeightedGraph current = g;
    std::vector<WeightedGraph> siblings;  // the other level-i subgraphs
    for (int level = 0; level < trace.depth; ++level) {
        if (current.m() < 2)
            throw PartitionError("level " + std::to_string(level) + ": subgraph has " + std::to_string(current.m()) +
                                 " edge(s), cannot partition further");
        const PartitionResult p = options.partitioner(current, stream_id(options.stream, level, 0));
        if (p.degenerate())
            throw PartitionError("level " + std::to_string(level) + ": partition search returned an empty side");

        LevelRecord rec;
        rec.level = level;
        rec.parent_edges = current.m();
        rec.side1_edges = p.count(1);
        rec.side2_edges = p.count(2);
        rec.chosen_side = rec.side1_edges <= rec.side2_edges ? 1 : 2;
        rec.parent_leverage = trace.path_leverage.back();
        rec.deviation = p.deviation;
        std::tie(rec.child_lower, rec.child_upper) = p.factors(rec.chosen_side);
        rec.theoretical_deviation = p.theoretical_bound;
        rec.met_bound = p.satisfied_bound;
        rec.method = p.method;
        rec.assignment = p.side;

        WeightedGraph child = subgraph(current, p.edges_on(rec.chosen_side));
        const double child_leverage = max_leverage(child);
        double level_max = child_leverage;

        if (options.track_global) {
            std::vector<WeightedGraph> next;
            next.push_back(subgraph(current, p.edges_on(rec.chosen_side == 1 ? 2 : 1)));
            for (std::size_t j = 0; j < siblings.size(); ++j) {
                const WeightedGraph& sib = siblings[j];
                if (sib.m() < 2) {
                    next.push_back(sib);
                    continue;
                }
                const PartitionResult sp = options.partitioner(sib, stream_id(options.stream, level, j + 1));
                next.push_back(subgraph(sib, sp.edges_on(1)));
                next.push_back(subgraph(sib, sp.edges_on(2)));
            }
            for (const WeightedGraph& h : next) level_max = std::max(level_max, max_leverage(h));
            siblings = std::move(next);
        }

        trace.measured_upper_product *= 2.0 * rec.child_upper;
        trace.measured_lower_product *= std::max(0.0, 2.0 * rec.child_lower);
        trace.deviation_product *= std::max(0.0, 1.0 - 2.0 * rec.deviation);
        trace.path_leverage.push_back(child_leverage);
        trace.global_leverage.push_back(level_max);
        trace.theoretical_log_factor += 10.0 * std::sqrt(level_max);
        trace.levels.push_back(std::move(rec));

        if (options.mode == Mode::Strict && level_max > options.delta * (1.0 + kBoundSlack))
            throw InfeasibleError("l_i <= delta", "level " + std::to_string(level + 1) + " max leverage " +
                                                      num(level_max) + " exceeds delta " + num(options.delta));
        current = std::move(child);
    }
    if (!options.track_global) trace.global_leverage = trace.path_leverage;

    trace.scale = std::ldexp(1.0, trace.depth);
    WeightedGraph out = scale_weights(current, trace.scale);
    ApproxCertificate cert = approx_factors(g, out);
    return {std::move(out), std::move(trace), std::move(cert)};
}

bool EnvelopeReport::all_upper_hold() const {
    return std::all_of(steps.begin(), steps.end(), [](const EnvelopeStep& s) { return s.upper; });
}

bool geometric_sum_holds(std::span<const double> leverages) {
    const double c = strict_constants().c;
    double running = 0.0;
    for (std::size_t k = 0; k < leverages.size(); ++k) {
        running += std::sqrt(leverages[k]);
        if (k >= 1 && running > c * std::sqrt(leverages[k]) + 1e-12) return false;
    }
    return true;
}

EnvelopeReport leverage_envelope_check(std::span<const double> leverages) {
    EnvelopeReport report;
    for (std::size_t i = 1; i < leverages.size(); ++i) {
        const double prev = leverages[i - 1];
        const double cur = leverages[i];
        const double root = std::sqrt(prev);
        EnvelopeStep s;
        s.level = static_cast<int>(i);
        s.previous = prev;
        s.current = cur;
        s.small_enough = 5.0 * root <= 1.0 / 6.0;
        s.upper_exponential = cur <= 2.0 * std::exp(10.0 * root) * prev * (1.0 + kEnvelopeSlack);
        s.upper = 0.5 - 5.0 * root > 0.0 && cur <= prev / (0.5 - 5.0 * root) * (1.0 + kEnvelopeSlack);
        s.lower = cur >= prev / (0.5 + 5.0 * root) * (1.0 - kEnvelopeSlack);
        s.lower_three_halves = cur >= 1.5 * prev * (1.0 - kEnvelopeSlack);
        report.geometric_sum_applicable = report.geometric_sum_applicable && s.lower_three_halves;
        report.steps.push_back(s);
    }
    report.geometric_sum_holds = geometric_sum_holds(leverages);
    return report;
}

EnvelopeReport leverage_envelope_check(const SparsifyTrace& trace) {
    if (trace.mode != Mode::Strict)
        throw std::invalid_argument("leverage envelope applies to strict-mode traces only");
    EnvelopeReport report = leverage_envelope_check(trace.global_leverage);
    report.path_local = !trace.global_tracking;
    for (const LevelRecord& rec : trace.levels) report.premises_met = report.premises_met && rec.met_bound;
    return report;
}

}  // namespace kss
