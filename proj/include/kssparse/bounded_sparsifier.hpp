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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kssparse/certify.hpp"
#include "kssparse/errors.hpp"
#include "kssparse/graph.hpp"
#include "kssparse/partition.hpp"

namespace kss {

enum class Mode { Strict, Relaxed };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view name);

/// Constants of the bounded-leverage recursion.
struct StrictConstants {
    double c;               ///< 3 + sqrt(6): geometric-sum constant
    double small_leverage;  ///< 1/900: keeps 5 sqrt(l) <= 1/6
};

const StrictConstants& strict_constants();

/// Exclusive upper limit on delta in relaxed mode.
inline constexpr double kRelaxedDeltaLimit = 0.25;

/// floor(log2(1/gamma) - log2(2/delta)), clamped at 0.
///
/// Strict mode requires 0 < gamma <= delta <= 1/900; relaxed mode
/// 0 < gamma <= delta < 1/4. Violations throw InfeasibleError.
int recursion_depth(double gamma, double delta, Mode mode);

struct LevelRecord {
    int level = 0;  ///< index i of the graph being split
    std::size_t parent_edges = 0;
    std::size_t side1_edges = 0;
    std::size_t side2_edges = 0;
    int chosen_side = 1;
    double parent_leverage = 0.0;  ///< max leverage of the path graph at level i
    double deviation = 0.5;
    double child_lower = 0.0;  ///< extreme eigenvalues of the chosen child's R_j
    double child_upper = 1.0;
    double theoretical_deviation = 0.0;  ///< 5 sqrt(parent_leverage)
    bool met_bound = false;              ///< deviation <= theoretical_deviation
    PartitionMethod method = PartitionMethod::Brute;
    std::vector<int> assignment;  ///< side per edge of the path graph
};

struct SparsifyTrace {
    Mode mode = Mode::Relaxed;
    int depth = 0;  ///< t
    std::optional<int> formula_depth;  ///< t from recursion_depth when it applies
    double gamma = 0.0;                ///< measured max leverage of the input
    double gamma_bound = 0.0;          ///< leverage bound the depth was derived from
    double delta = 0.0;
    double rho = 0.0;  ///< gamma * m / n
    bool global_tracking = true;
    std::vector<double> path_leverage;    ///< l_i along the selected path, i = 0..t
    std::vector<double> global_leverage;  ///< l_i over all 2^i subgraphs (== path when not tracking)
    std::vector<LevelRecord> levels;
    double theoretical_log_factor = 0.0;  ///< sum_i 10 sqrt(l_i) over the recorded leverages
    /// prod_i 2 b_i over the chosen children: upper-bounds b of the output.
    double measured_upper_product = 1.0;
    /// prod_i 2 a_i: lower-bounds a of the output (0 once a child loses rank).
    double measured_lower_product = 1.0;
    /// prod_i (1 - 2 d_i). Its reciprocal bounds b and it bounds a from below,
    /// i.e. log b <= sum_i -log(1/2 - d_i) - t log 2.
    double deviation_product = 1.0;
    double scale = 1.0;                   ///< 2^t
    std::vector<std::string> notes;
};

struct BoundedOptions {
    double delta = 1.0 / 900.0;
    Mode mode = Mode::Strict;
    Partitioner partitioner;
    /// Derive t from this leverage bound instead of the measured maximum.
    std::optional<double> gamma_bound;
    /// Use this t directly (the relaxed pipeline's size-driven depth).
    std::optional<int> depth;
    /// Partition every sibling to record the level-wide maximum leverage.
    bool track_global = true;
    std::uint64_t stream = 0;
};

struct BoundedResult {
    WeightedGraph graph;  ///< smallest-path subgraph, weights times 2^t
    SparsifyTrace trace;
    ApproxCertificate certificate;  ///< of graph against the input
};

/// Repeatedly partitions the input t times, descending each time into the
/// side with fewer edges (side 1 on ties), and reweights the final subgraph
/// by 2^t.
///
/// In strict mode, a level-wide maximum leverage above delta aborts with
/// InfeasibleError. Relaxed mode records the same quantities and carries on.
/// Throws PartitionError if a path graph with fewer than two edges would
/// need splitting.
BoundedResult sparsify_bounded(const WeightedGraph& g, const BoundedOptions& options);

/// Status of the leverage growth inequalities between consecutive levels.
struct EnvelopeStep {
    int level = 0;  ///< i, comparing l_{i-1} and l_i
    double previous = 0.0;
    double current = 0.0;
    /// l_i <= 2 e^{10 sqrt(l_{i-1})} l_{i-1}. Slightly tighter than `upper`:
    /// (1 - x)^{-1} >= e^x, so this form can fail where the exact one holds.
    bool upper_exponential = false;
    bool upper = false;              ///< l_i <= (1/2 - 5 sqrt(l_{i-1}))^{-1} l_{i-1}
    bool lower = false;              ///< l_i >= (1/2 + 5 sqrt(l_{i-1}))^{-1} l_{i-1}
    bool lower_three_halves = false; ///< l_i >= (3/2) l_{i-1}
    bool small_enough = false;       ///< 5 sqrt(l_{i-1}) <= 1/6
};

struct EnvelopeReport {
    std::vector<EnvelopeStep> steps;
    bool path_local = false;
    bool premises_met = true;  ///< every level met d_i <= 5 sqrt(l_{i-1})
    /// sum_{i<=k} sqrt(l_i) <= (3 + sqrt 6) sqrt(l_k) for every k >= 1
    bool geometric_sum_holds = true;
    /// all lower_three_halves held, so the geometric sum is guaranteed
    bool geometric_sum_applicable = true;

    /// Every step met the exact upper bound `upper`.
    bool all_upper_hold() const;
};

/// Checks a leverage sequence l_0, l_1, ... directly, with 1e-12 relative
/// slack on every comparison.
EnvelopeReport leverage_envelope_check(std::span<const double> leverages);

/// Checks a strict-mode trace (level-wide leverages when tracked).
/// Throws std::invalid_argument for a relaxed-mode trace.
EnvelopeReport leverage_envelope_check(const SparsifyTrace& trace);

/// sum_{i<=k} sqrt(l_i) <= (3 + sqrt 6) sqrt(l_k) for all k >= 1, with 1e-12 slack.
bool geometric_sum_holds(std::span<const double> leverages);

}  // namespace kss
