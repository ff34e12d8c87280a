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
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kssparse/graph.hpp"
#include "kssparse/leverage.hpp"

namespace kss {

class PartitionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class PartitionMethod { Brute, Random, Auto };

std::string_view to_string(PartitionMethod m);
PartitionMethod parse_partition_method(std::string_view name);

/// Two-colouring of a graph's edges and its spectral balance.
///
/// With R_1 = L_G^{+1/2} L_{H_1} L_G^{+1/2} on range(L_G), the deviation is
/// max |lambda - 1/2| over the eigenvalues of R_1. Because R_1 + R_2 is the
/// identity on the range, the same value describes side 2.
struct PartitionResult {
    std::vector<int> side;  ///< 1 or 2 per edge
    double deviation = 0.5;
    double r_min = 0.0;  ///< smallest eigenvalue of R_1
    double r_max = 0.0;  ///< largest eigenvalue of R_1
    double alpha = 0.0;  ///< max leverage of the partitioned graph
    double theoretical_bound = 0.0;  ///< 5 sqrt(alpha)
    bool satisfied_bound = false;    ///< deviation <= 5 sqrt(alpha)
    bool bound_vacuous = false;      ///< 5 sqrt(alpha) >= 1/2
    PartitionMethod method = PartitionMethod::Brute;
    std::uint64_t candidates = 0;

    std::vector<std::size_t> edges_on(int s) const;
    std::size_t count(int s) const;
    bool degenerate() const { return count(1) == 0 || count(2) == 0; }
    /// Extreme eigenvalues [a, b] of R_j for side j.
    std::pair<double, double> factors(int s) const;
};

/// Deviation of a given assignment (1/2 per edge) measured from scratch.
PartitionResult evaluate_partition(const WeightedGraph& g, std::span<const int> side);

inline constexpr std::size_t kDefaultBruteForceCap = 22;
inline constexpr std::size_t kMaxBruteForceCap = 40;

struct BruteForceOptions {
    std::size_t cap = kDefaultBruteForceCap;  ///< at most kMaxBruteForceCap
    std::size_t threads = 0;  ///< 0: hardware concurrency
};

/// Exhaustive search over the 2^(m-1) colourings with edge 0 on side 1.
/// Minimises the deviation; near-ties (within 1e-12) prefer a colouring with
/// both sides non-empty, then the lexicographically smallest side-1 index set.
/// The result does not depend on the thread count. Throws PartitionError
/// when m < 2 or m exceeds the cap.
PartitionResult brute_force_partition(const WeightedGraph& g, const BruteForceOptions& options = {});

/// Best of `budget` uniform colourings drawn from mt19937_64(seed). Each draw
/// consumes ceil(m/64) words, so a smaller budget sees a prefix of a larger
/// one's stream.
PartitionResult random_partition(const WeightedGraph& g, std::uint64_t budget, std::uint64_t seed);

/// Partition search policy shared by the sparsifiers.
struct Partitioner {
    PartitionMethod method = PartitionMethod::Auto;
    std::uint64_t budget = 1024;
    std::uint64_t seed = 0;
    std::size_t brute_cap = kDefaultBruteForceCap;
    std::size_t threads = 0;

    /// `stream` separates independent calls made from one seed.
    PartitionResult operator()(const WeightedGraph& g, std::uint64_t stream) const;
};

/// Outcome of checking (1/2 - d) L_G <= L_{H_j} <= (1/2 + d) L_G for one side.
struct LoewnerWitness {
    int side = 1;
    double measured_deviation = 0.0;
    double theoretical_deviation = 0.0;
    bool measured_lower = false;
    bool measured_upper = false;
    bool theoretical_lower = false;
    bool theoretical_upper = false;

    bool measured_holds() const { return measured_lower && measured_upper; }
    bool theoretical_holds() const { return theoretical_lower && theoretical_upper; }
};

/// Checks both sides at the measured deviation and at 5 sqrt(alpha), with
/// eigenvalue tolerance 1e-9. Throws std::invalid_argument when the
/// assignment length differs from m.
std::pair<LoewnerWitness, LoewnerWitness> partition_bounds_check(const WeightedGraph& g, const PartitionResult& p);

}  // namespace kss
