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

#include "kssparse/report.hpp"

#include <algorithm>
#include <cmath>

namespace kss::report {

namespace {

// JSON has no infinities; unbounded quantities are written as null.
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json constants() {
    const StrictConstants& s = strict_constants();
    const GeneralConstants& g = general_constants();
    return {
        {"c", s.c},
        {"small_leverage", s.small_leverage},
        {"c_prime", g.c_prime},
        {"beta_exponent", g.beta_exponent},
        {"beta", g.beta},
        {"beta_margin", g.beta_margin},
        {"relaxed_delta_limit", kRelaxedDeltaLimit},
        {"certify_tolerance", kCertifyTolerance},
    };
}

json to_json(const LeverageProfile& p) {
    return {
        {"scores", p.scores},
        {"max", p.max},
        {"argmax", p.argmax},
        {"sum", p.sum},
        {"n", p.n},
        {"components", p.components},
        {"expected_sum", p.expected_sum()},
    };
}

json to_json(const PartitionResult& p) {
    return {
        {"method", to_string(p.method)},
        {"side", p.side},
        {"side1_edges", p.count(1)},
        {"side2_edges", p.count(2)},
        {"deviation", p.deviation},
        {"r_min", p.r_min},
        {"r_max", p.r_max},
        {"alpha", p.alpha},
        {"theoretical_bound", p.theoretical_bound},
        {"satisfied_bound", p.satisfied_bound},
        {"bound_vacuous", p.bound_vacuous},
        {"candidates", p.candidates},
    };
}

json to_json(const ApproxCertificate& c) {
    return {
        {"a", c.lower},
        {"b", c.upper},
        {"kernel_match", c.kernel_match},
        {"rank_g", c.rank_g},
        {"rank_h", c.rank_h},
        {"epsilon", number(c.epsilon())},
        {"epsilon_exp", number(c.epsilon_exp())},
    };
}

json to_json(const Schedule& s) {
    json steps = json::array();
    for (const ScheduleStep& st : s.steps)
        steps.push_back({
            {"index", st.index},
            {"delta", st.delta},
            {"mhat", st.mhat},
            {"required_delta", st.required_delta},
            {"meets_lower", st.meets_lower},
            {"meets_smallness", st.meets_smallness},
            {"feasibility", st.proved_feasible ? "proved" : (st.feasible() ? "checked" : "violated")},
        });
    return {
        {"T", s.steps_planned},
        {"delta_T", s.delta_final},
        {"delta", s.delta},
        {"mhat", s.mhat},
        {"termination_size", s.termination_size},
        {"factor_sum", s.factor_sum()},
        {"factor_bound", s.factor_bound()},
        {"steps", steps},
    };
}

json to_json(const SplitReport& s) {
    return {
        {"mhat", s.mhat},
        {"threshold", s.threshold},
        {"multiplicity", s.multiplicity},
        {"bad_edges", s.bad_edges},
        {"bad_count", s.bad_edges.size()},
        {"size_bound", s.size_bound},
        {"size_bound_holds", s.size_bound_holds},
    };
}

json to_json(const SparsifyTrace& t) {
    json levels = json::array();
    for (const LevelRecord& l : t.levels)
        levels.push_back({
            {"level", l.level},
            {"parent_edges", l.parent_edges},
            {"side1_edges", l.side1_edges},
            {"side2_edges", l.side2_edges},
            {"chosen_side", l.chosen_side},
            {"parent_leverage", l.parent_leverage},
            {"deviation", l.deviation},
            {"child_a", l.child_lower},
            {"child_b", l.child_upper},
            {"theoretical_deviation", l.theoretical_deviation},
            {"met_bound", l.met_bound},
            {"method", to_string(l.method)},
        });
    json out = {
        {"mode", to_string(t.mode)},
        {"t", t.depth},
        {"t_formula", t.formula_depth ? json(*t.formula_depth) : json(nullptr)},
        {"gamma", t.gamma},
        {"gamma_bound", t.gamma_bound},
        {"delta", t.delta},
        {"rho", t.rho},
        {"global_tracking", t.global_tracking},
        {"path_leverage", t.path_leverage},
        {"global_leverage", t.global_leverage},
        {"levels", levels},
        {"theoretical_log_factor", t.theoretical_log_factor},
        {"measured_upper_product", t.measured_upper_product},
        {"measured_lower_product", t.measured_lower_product},
        {"deviation_product", t.deviation_product},
        {"scale", t.scale},
        {"notes", t.notes},
    };
    return out;
}

json to_json(const StepReport& s) {
    return {
        {"index", s.index},
        {"mhat", s.mhat},
        {"delta", s.delta},
        {"edges_in", s.edges_in},
        {"edges_split", s.edges_split},
        {"edges_out", s.edges_out},
        {"split", to_json(s.split)},
        {"t", s.depth},
        {"t_formula", s.formula_depth ? json(*s.formula_depth) : json(nullptr)},
        {"skipped", s.skipped},
        {"size_bound", s.size_bound},
        {"size_bound_holds", s.size_bound_holds},
        {"theoretical_epsilon", s.theoretical_epsilon},
        {"certificate", to_json(s.certificate)},
        {"trace", to_json(s.trace)},
    };
}

json to_json(const RunReport& r, std::optional<double> wall_time_ms) {
    json steps = json::array();
    for (const StepReport& s : r.steps) steps.push_back(to_json(s));
    json out = {
        {"schema", kRunSchema},
        {"input", {{"n", r.n}, {"m", r.m}, {"max_leverage", r.input_max_leverage}}},
        {"mode", to_string(r.mode)},
        {"epsilon", r.epsilon},
        {"partitioner",
         {{"method", to_string(r.partitioner.method)},
          {"budget", r.partitioner.budget},
          {"brute_cap", r.partitioner.brute_cap}}},
        {"seed", r.partitioner.seed},
        {"constants", constants()},
        {"schedule", to_json(r.schedule)},
        {"target_size", r.target_size},
        {"steps", steps},
        {"stop_reason", r.stop_reason},
        {"final_edges", r.final_edges},
        {"certificate", to_json(r.certificate)},
        {"epsilon_measured", number(r.certificate.epsilon())},
        {"composed",
         {{"a", r.composed_lower},
          {"b", r.composed_upper},
          {"epsilon", std::max(r.composed_upper - 1.0, 1.0 - r.composed_lower)}}},
        {"theoretical_factor", r.theoretical_factor},
    };
    if (wall_time_ms) out["wall_time_ms"] = *wall_time_ms;
    return out;
}

json leverage_document(const LeverageProfile& p) {
    json out = {{"schema", kLeverageSchema}};
    out.update(to_json(p));
    return out;
}

json partition_document(const PartitionResult& p, std::uint64_t seed) {
    json out = {{"schema", kPartitionSchema}};
    out.update(to_json(p));
    out["seed"] = seed;
    return out;
}

json certificate_document(const ApproxCertificate& c, double epsilon, bool verified) {
    json out = {{"schema", kCertificateSchema}};
    out.update(to_json(c));
    out["requested_epsilon"] = epsilon;
    out["verified"] = verified;
    return out;
}

}  // namespace kss::report
