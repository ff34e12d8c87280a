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

#include "kssparse/general_sparsifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kssparse/leverage.hpp"

namespace kss {

namespace {

std::string num(double x) {
    std::ostringstream out;
    out.precision(6);
    out << x;
    return out.str();
}

GeneralConstants compute_general_constants() {
    GeneralConstants k{};
    k.c_prime = strict_constants().c * (2.0 + std::sqrt(2.0));
    k.beta_exponent = 1.0 - 1.0 / std::log2(3.0);
    const double rhs = 300.0 * k.c_prime * k.c_prime;
    auto margin = [&](double beta) { return std::pow(beta, k.beta_exponent) - rhs; };
    constexpr double required = 1e-6;

    double lo = std::pow(rhs, 1.0 / k.beta_exponent);
    double hi = lo;
    while (margin(hi) < required) hi *= 1.0 + 1e-9;
    while (margin(lo) >= required) lo *= 1.0 - 1e-9;
    // smallest representable beta meeting the margin
    while (std::nextafter(lo, hi) < hi) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        (margin(mid) >= required ? hi : lo) = mid;
    }
    k.beta = hi;
    k.beta_margin = margin(hi);
    return k;
}

int floor_nonnegative(double x) { return x < 0.0 ? 0 : static_cast<int>(std::floor(x + 1e-9)); }

}  // namespace

const GeneralConstants& general_constants() {
    static const GeneralConstants constants = compute_general_constants();
    return constants;
}

std::optional<ScheduleViolation> Schedule::first_violation() const {
    for (const ScheduleStep& s : steps) {
        if (!s.meets_lower)
            return ScheduleViolation{s.index, "delta_i >= 3n/mhat_i",
                                     "step " + std::to_string(s.index) + ": delta_" + std::to_string(s.index) + " = " +
                                         num(s.delta) + " < 3n/mhat_" + std::to_string(s.index) + " = " +
                                         num(s.required_delta)};
        if (!s.meets_smallness)
            return ScheduleViolation{s.index, mode == Mode::Strict ? "delta_i <= 1/900" : "delta_i < 1/4",
                                     "step " + std::to_string(s.index) + ": delta_" + std::to_string(s.index) + " = " +
                                         num(s.delta)};
    }
    return std::nullopt;
}

double Schedule::factor_sum() const {
    const double c = strict_constants().c;
    double sum = 0.0;
    for (double d : delta) sum += 10.0 * c * std::sqrt(d);
    return sum;
}

double Schedule::factor_bound() const {
    return 10.0 * strict_constants().c * (2.0 + std::sqrt(2.0)) * std::sqrt(delta_final);
}

Schedule build_schedule(std::size_t n, std::size_t m, double epsilon, Mode mode, std::optional<double> delta_final) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (n < 2) throw std::invalid_argument("schedule needs at least two vertices");
    if (m == 0) throw std::invalid_argument("schedule needs at least one edge");
    const GeneralConstants& k = general_constants();

    Schedule s;
    s.mode = mode;
    s.n = n;
    s.m = m;
    s.epsilon = epsilon;
    const double log3 = std::log(3.0);
    const double dn = static_cast<double>(n);
    s.steps_planned =
        floor_nonnegative(std::log(static_cast<double>(m) / dn) / log3 - std::log(1.0 / (epsilon * epsilon)) / log3);

    if (mode == Mode::Strict) {
        if (delta_final) throw std::invalid_argument("strict mode derives delta_T from epsilon; no override allowed");
        s.delta_final = std::pow(epsilon / (10.0 * k.c_prime), 2.0);
    } else {
        s.delta_final = delta_final.value_or(kDefaultRelaxedDeltaT);
        if (!(s.delta_final > 0.0 && s.delta_final < kRelaxedDeltaLimit))
            throw std::invalid_argument("relaxed delta_T must lie in (0, 1/4)");
    }

    const int T = s.steps_planned;
    s.termination_size = k.beta * dn / (epsilon * epsilon);
    s.mhat.push_back(static_cast<double>(m));
    for (int i = 0; i <= T; ++i) {
        const double d = std::ldexp(s.delta_final, -(T - i));
        s.delta.push_back(d);
        s.mhat.push_back(s.mhat.back() / 3.0 + 6.0 * dn / d);
    }
    for (int i = 0; i <= T; ++i) {
        ScheduleStep step;
        step.index = i;
        step.delta = s.delta[i];
        step.mhat = s.mhat[i];
        step.required_delta = 3.0 * dn / step.mhat;
        step.meets_lower = step.delta >= step.required_delta;
        step.meets_smallness =
            mode == Mode::Strict ? step.delta <= strict_constants().small_leverage : step.delta < kRelaxedDeltaLimit;
        step.proved_feasible = mode == Mode::Strict && step.mhat > s.termination_size;
        s.steps.push_back(step);
    }
    return s;
}

double mhat_closed_form(const Schedule& s, int k) {
    if (k < 0 || k > static_cast<int>(s.delta.size())) throw std::out_of_range("mhat_closed_form: step out of range");
    const double dn = static_cast<double>(s.n);
    double value = static_cast<double>(s.m) / std::pow(3.0, k);
    for (int i = 0; i < k; ++i) value += std::pow(1.0 / 3.0, k - 1 - i) * 6.0 * dn / s.delta[i];
    return value;
}

SplitResult split_bad_edges(const WeightedGraph& g, double mhat) {
    if (!(mhat >= static_cast<double>(g.m())))
        throw std::invalid_argument("mhat = " + num(mhat) + " is below the edge count " + std::to_string(g.m()));
    SplitResult result;
    SplitReport& r = result.report;
    const double dn = static_cast<double>(g.n());
    r.mhat = mhat;
    r.threshold = 3.0 * dn / mhat;
    r.multiplicity = static_cast<std::size_t>(std::max(1.0, std::ceil(mhat / (3.0 * dn) - 1e-9)));
    r.size_bound = mhat / 3.0;

    if (g.m() == 0) {
        result.graph = g;
        return result;
    }
    const LeverageProfile profile = leverage_scores(g);
    std::vector<Edge> out;
    out.reserve(g.m());
    for (std::size_t e = 0; e < g.m(); ++e) {
        const Edge& edge = g.edges()[e];
        if (profile.scores[e] > r.threshold && r.multiplicity > 1) {
            r.bad_edges.push_back(e);
            Edge copy = edge;
            copy.weight = edge.weight / static_cast<double>(r.multiplicity);
            out.insert(out.end(), r.multiplicity, copy);
        } else {
            if (profile.scores[e] > r.threshold) r.bad_edges.push_back(e);
            out.push_back(edge);
        }
    }
    r.size_bound_holds = static_cast<double>(r.bad_edges.size()) <= r.size_bound;
    result.graph = WeightedGraph(g.n(), std::move(out));
    return result;
}

StepResult sparsify_step(const WeightedGraph& g, double mhat, double delta, const StepOptions& options) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    const double dn = static_cast<double>(g.n());
    if (options.mode == Mode::Strict && delta < 3.0 * dn / mhat)
        throw InfeasibleError("delta_i >= 3n/mhat_i", "step " + std::to_string(options.index) + ": delta = " +
                                                          num(delta) + " < 3n/mhat = " + num(3.0 * dn / mhat));

    const WeightedGraph input = relabel_parents(g);
    StepResult result;
    StepReport& r = result.report;
    r.index = options.index;
    r.mhat = mhat;
    r.delta = delta;
    r.edges_in = input.m();
    r.size_bound = mhat / 3.0 + 6.0 * dn / delta;
    r.theoretical_epsilon = 10.0 * strict_constants().c * std::sqrt(delta);

    SplitResult split = split_bad_edges(input, mhat);
    r.split = split.report;
    r.edges_split = split.graph.m();
    r.formula_depth = floor_nonnegative(std::log2(mhat / (3.0 * dn)) - std::log2(2.0 / delta));
    r.depth = options.depth.value_or(*r.formula_depth);

    WeightedGraph out;
    if (r.depth == 0) {
        r.skipped = true;
        r.trace.mode = options.mode;
        r.trace.delta = delta;
        r.trace.notes.push_back("t = 0: split and recombine only");
        out = recombine(split.graph);
    } else {
        BoundedOptions bounded;
        bounded.delta = delta;
        bounded.mode = options.mode;
        bounded.partitioner = options.partitioner;
        if (options.mode == Mode::Strict) bounded.gamma_bound = 3.0 * dn / mhat;
        bounded.depth = r.depth;
        bounded.track_global = options.track_global;
        bounded.stream = static_cast<std::uint64_t>(options.index);
        BoundedResult b = sparsify_bounded(split.graph, bounded);
        r.trace = std::move(b.trace);
        out = recombine(b.graph);
    }
    out = relabel_parents(out);
    r.edges_out = out.m();
    r.size_bound_holds = static_cast<double>(r.edges_out) <= r.size_bound;
    r.certificate = approx_factors(input, out);

    if (options.mode == Mode::Strict) {
        if (!r.size_bound_holds)
            throw InfeasibleError("|E_H| <= mhat/3 + 6n/delta", "step " + std::to_string(r.index) + ": " +
                                                                    std::to_string(r.edges_out) + " > " +
                                                                    num(r.size_bound));
        if (!certifies(r.certificate, r.theoretical_epsilon, Convention::Exponential))
            throw InfeasibleError("e^{-10c sqrt(delta)} L_G <= L_H <= e^{10c sqrt(delta)} L_G",
                                  "step " + std::to_string(r.index) + ": measured a = " + num(r.certificate.lower) +
                                      ", b = " + num(r.certificate.upper));
    }
    result.graph = std::move(out);
    return result;
}

GeneralResult sparsify_general(const WeightedGraph& g, const GeneralOptions& options) {
    if (options.mode == Mode::Strict && (options.delta_final || options.target_size))
        throw std::invalid_argument("strict mode does not accept delta_T or target-size overrides");

    RunReport report;
    report.n = g.n();
    report.m = g.m();
    report.mode = options.mode;
    report.epsilon = options.epsilon;
    report.partitioner = options.partitioner;
    report.input_max_leverage = g.m() == 0 ? 0.0 : leverage_scores(g).max;
    report.schedule = build_schedule(g.n(), std::max<std::size_t>(g.m(), 1), options.epsilon, options.mode,
                                     options.delta_final);
    const Schedule& schedule = report.schedule;
    const double dn = static_cast<double>(g.n());

    if (options.mode == Mode::Strict) {
        if (auto v = schedule.first_violation()) throw InfeasibleError(v->inequality, v->detail);
    }
    report.target_size = options.target_size.value_or(
        static_cast<std::size_t>(std::ceil(dn / (options.epsilon * options.epsilon))));

    WeightedGraph current = relabel_parents(g);
    StepOptions step_options;
    step_options.mode = options.mode;
    step_options.partitioner = options.partitioner;
    step_options.track_global = options.track_global;

    if (options.mode == Mode::Strict) {
        report.stop_reason = "completed all planned steps";
        for (int i = 0; i <= schedule.steps_planned; ++i) {
            if (static_cast<double>(current.m()) <= schedule.termination_size) {
                report.stop_reason = "reached beta n / eps^2 edges";
                break;
            }
            step_options.index = i;
            StepResult step = sparsify_step(current, schedule.mhat[i], schedule.delta[i], step_options);
            report.theoretical_factor += step.report.theoretical_epsilon;
            report.steps.push_back(std::move(step.report));
            current = std::move(step.graph);
        }
    } else {
        double mhat = static_cast<double>(g.m());
        for (int i = 0;; ++i) {
            if (current.m() <= report.target_size) {
                report.stop_reason = "reached target size";
                break;
            }
            if (i >= options.max_relaxed_steps) {
                report.stop_reason = "step limit reached";
                break;
            }
            const double delta = i <= schedule.steps_planned ? schedule.delta[i] : schedule.delta_final;
            mhat = std::max(mhat, static_cast<double>(current.m()));
            const double ratio = static_cast<double>(current.m()) / static_cast<double>(report.target_size);
            step_options.index = i;
            step_options.depth = std::max(1, static_cast<int>(std::ceil(std::log2(ratio) - 1e-12)));
            StepResult step = sparsify_step(current, mhat, delta, step_options);
            if (!step.report.certificate.kernel_match)
                throw PartitionError("step " + std::to_string(i) + " output lost connectivity relative to its input");
            report.theoretical_factor += step.report.theoretical_epsilon;
            const bool progressed = step.graph.m() < current.m();
            report.steps.push_back(std::move(step.report));
            current = std::move(step.graph);
            mhat = mhat / 3.0 + 6.0 * dn / delta;
            if (!progressed) {
                report.stop_reason = "no further reduction";
                break;
            }
        }
    }

    for (const StepReport& s : report.steps) {
        report.composed_lower *= s.certificate.lower;
        report.composed_upper *= s.certificate.upper;
    }
    report.final_edges = current.m();
    report.certificate = approx_factors(g, current);
    return {std::move(current), std::move(report)};
}

}  // namespace kss
