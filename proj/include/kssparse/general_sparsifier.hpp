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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kssparse/bounded_sparsifier.hpp"
#include "kssparse/certify.hpp"
#include "kssparse/graph.hpp"
#include "kssparse/partition.hpp"

namespace kss {

struct GeneralConstants {
    double c_prime;         ///< c (2 + sqrt 2)
    double beta_exponent;   ///< 1 - 1/log2(3)
    double beta;            ///< smallest double with beta^exponent - 300 c'^2 >= 1e-6
    double beta_margin;     ///< beta^exponent - 300 c'^2
};

const GeneralConstants& general_constants();

/// Default delta_T for relaxed runs.
inline constexpr double kDefaultRelaxedDeltaT = 0.2;

struct ScheduleStep {
    int index = 0;
    double delta = 0.0;
    double mhat = 0.0;
    double required_delta = 0.0;  ///< 3n / mhat_i
    bool meets_lower = false;     ///< delta_i >= 3n / mhat_i
    bool meets_smallness = false; ///< delta_i within the mode's leverage limit
    /// mhat_i > beta n / eps^2, the regime in which feasibility is proved
    /// rather than only checked.
    bool proved_feasible = false;

    bool feasible() const { return meets_lower && meets_smallness; }
};

struct ScheduleViolation {
    int step = 0;
    std::string inequality;
    std::string detail;
};

/// Outer-loop plan: T, delta_i = delta_T / 2^(T-i), and the mhat recurrence
/// mhat_{i+1} = mhat_i / 3 + 6n / delta_i starting from mhat_0 = m.
struct Schedule {
    Mode mode = Mode::Strict;
    std::size_t n = 0;
    std::size_t m = 0;
    double epsilon = 0.0;
    int steps_planned = 0;  ///< T
    double delta_final = 0.0;  ///< delta_T
    std::vector<double> delta;  ///< i = 0..T
    std::vector<double> mhat;   ///< i = 0..T+1
    double termination_size = 0.0;  ///< beta n / eps^2
    std::vector<ScheduleStep> steps;

    /// The first infeasible step, if any.
    std::optional<ScheduleViolation> first_violation() const;
    /// sum_{i<=T} 10 c sqrt(delta_i)
    double factor_sum() const;
    /// 10 c (2 + sqrt 2) sqrt(delta_T)
    double factor_bound() const;
};

/// Throws std::invalid_argument unless 0 < epsilon < 1 and n >= 2, or
/// when a delta_T override is passed in strict mode (or is outside (0, 1/4)).
Schedule build_schedule(std::size_t n, std::size_t m, double epsilon, Mode mode,
                        std::optional<double> delta_final = std::nullopt);

/// mhat_0 / 3^k + sum_{i<k} (1/3)^(k-1-i) 6n / delta_i
double mhat_closed_form(const Schedule& s, int k);

struct SplitReport {
    double mhat = 0.0;
    double threshold = 0.0;   ///< 3n / mhat
    std::size_t multiplicity = 1;  ///< ceil(mhat / 3n)
    std::vector<std::size_t> bad_edges;
    double size_bound = 0.0;  ///< mhat / 3
    bool size_bound_holds = true;  ///< |S| <= mhat / 3
};

struct SplitResult {
    WeightedGraph graph;
    SplitReport report;
};

/// Splits every edge with leverage above 3n/mhat into ceil(mhat/3n) equal
/// parallel copies. Throws std::invalid_argument when mhat < m.
SplitResult split_bad_edges(const WeightedGraph& g, double mhat);

struct StepOptions {
    Mode mode = Mode::Strict;
    Partitioner partitioner;
    /// Level count for the bounded sparsifier; replaces the mhat-derived t.
    std::optional<int> depth;
    bool track_global = true;
    int index = 0;
};

struct StepReport {
    int index = 0;
    double mhat = 0.0;
    double delta = 0.0;
    std::size_t edges_in = 0;
    std::size_t edges_split = 0;
    std::size_t edges_out = 0;
    SplitReport split;
    int depth = 0;
    std::optional<int> formula_depth;  ///< floor(log2(mhat/3n) - log2(2/delta)), clamped at 0
    bool skipped = false;              ///< t = 0: split and recombine only
    double size_bound = 0.0;           ///< mhat/3 + 6n/delta
    bool size_bound_holds = true;
    double theoretical_epsilon = 0.0;  ///< 10 c sqrt(delta)
    ApproxCertificate certificate;     ///< output against this step's input
    SparsifyTrace trace;
};

struct StepResult {
    WeightedGraph graph;
    StepReport report;
};

/// Split, sparsify the split graph, recombine. Strict mode requires
/// delta >= 3n/mhat and enforces the mhat/3 + 6n/delta size bound and the
/// exponential-form certificate at 10 c sqrt(delta); violations throw
/// InfeasibleError.
StepResult sparsify_step(const WeightedGraph& g, double mhat, double delta, const StepOptions& options);

struct GeneralOptions {
    double epsilon = 0.5;
    Mode mode = Mode::Relaxed;
    Partitioner partitioner;
    std::optional<double> delta_final;   ///< relaxed only
    std::optional<std::size_t> target_size;  ///< relaxed only; default ceil(n / eps^2)
    bool track_global = true;
    int max_relaxed_steps = 16;
};

struct RunReport {
    std::size_t n = 0;
    std::size_t m = 0;
    double input_max_leverage = 0.0;
    Mode mode = Mode::Relaxed;
    double epsilon = 0.0;
    Schedule schedule;
    std::size_t target_size = 0;
    std::vector<StepReport> steps;
    std::string stop_reason;
    std::size_t final_edges = 0;
    ApproxCertificate certificate;   ///< output against the original input
    double composed_lower = 1.0;     ///< prod of per-step a
    double composed_upper = 1.0;     ///< prod of per-step b
    double theoretical_factor = 0.0; ///< sum over executed steps of 10 c sqrt(delta_i)
    Partitioner partitioner;
};

struct GeneralResult {
    WeightedGraph graph;
    RunReport report;
};

/// Outer loop over sparsify_step.
///
/// Strict mode first requires every planned step to be feasible and throws
/// InfeasibleError naming the first violated inequality otherwise; it then
/// stops early once the graph has at most beta n / eps^2 edges. Relaxed mode
/// stops once the graph is at or below the target size, choosing each step's
/// level count as ceil(log2(m_i / target)).
GeneralResult sparsify_general(const WeightedGraph& g, const GeneralOptions& options);

}  // namespace kss
