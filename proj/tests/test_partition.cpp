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

#include <cmath>

#include <gtest/gtest.h>

#include "kssparse/certify.hpp"
#include "kssparse/generators.hpp"
#include "kssparse/partition.hpp"
#include "oracle.hpp"

namespace kss {
namespace {

// Best deviation over the 32 colourings of unit K_4, recorded from the
// exhaustive search (two complementary Hamiltonian paths).
constexpr double kK4BestDeviation = 0.35355339059327373;

TEST(Evaluate, MatchesOracle) {
    const auto g = oracle::load("random_n12_m30");
    std::vector<int> side(g.m());
    for (std::size_t i = 0; i < g.m(); ++i) side[i] = 1 + static_cast<int>((i * 7) % 3 == 0);
    const auto p = evaluate_partition(g, side);
    EXPECT_NEAR(p.deviation, oracle::deviation(g, side), 1e-10);
    const auto [lo, hi] = oracle::factors(oracle::laplacian(g), oracle::half_laplacian(g, side, 1));
    EXPECT_NEAR(p.r_min, lo, 1e-10);
    EXPECT_NEAR(p.r_max, hi, 1e-10);
    const auto [a2, b2] = p.factors(2);
    EXPECT_NEAR(a2, 1.0 - hi, 1e-12);
    EXPECT_NEAR(b2, 1.0 - lo, 1e-12);
}

TEST(Evaluate, RejectsBadAssignments) {
    const auto g = generators::path(3);
    EXPECT_THROW(evaluate_partition(g, std::vector<int>{1}), std::invalid_argument);
    EXPECT_THROW(evaluate_partition(g, std::vector<int>{1, 3}), std::invalid_argument);
}

TEST(BruteForce, TwoParallelEdges) {
    const auto p = brute_force_partition(oracle::load("two_parallel"));
    EXPECT_NEAR(p.deviation, 0.0, 1e-12);
    EXPECT_EQ(p.count(1), 1u);
    EXPECT_EQ(p.count(2), 1u);
    EXPECT_EQ(p.candidates, 2u);
}

TEST(BruteForce, K4GlobalMinimum) {
    const auto g = oracle::load("k4");
    const auto p = brute_force_partition(g);
    EXPECT_EQ(p.candidates, 32u);
    EXPECT_NEAR(p.deviation, oracle::min_deviation(g), 1e-10);
    EXPECT_NEAR(p.deviation, kK4BestDeviation, 1e-9);
    EXPECT_NEAR(p.alpha, 0.5, 1e-12);
    EXPECT_NEAR(p.theoretical_bound, 5.0 * std::sqrt(0.5), 1e-12);
    EXPECT_TRUE(p.satisfied_bound);
    EXPECT_TRUE(p.bound_vacuous);
    EXPECT_EQ(p.side[0], 1);
}

TEST(BruteForce, StarOnlyHasHalfDeviation) {
    const auto p = brute_force_partition(oracle::load("star5"));
    EXPECT_NEAR(p.deviation, 0.5, 1e-12);
    EXPECT_NEAR(p.alpha, 1.0, 1e-9);
    EXPECT_TRUE(p.satisfied_bound);
    EXPECT_TRUE(p.bound_vacuous);
    EXPECT_FALSE(p.degenerate());
}

TEST(BruteForce, MatchesEnumerationOracle) {
    for (const char* name : {"k23", "cycle6", "dumbbell", "weighted_triangle", "path3"}) {
        const auto g = oracle::load(name);
        EXPECT_NEAR(brute_force_partition(g).deviation, oracle::min_deviation(g), 1e-10) << name;
    }
}

TEST(BruteForce, ThreadCountDoesNotChangeResult) {
    const auto g = generators::random_connected(7, 16, 4, true);
    const auto one = brute_force_partition(g, {.cap = 22, .threads = 1});
    for (std::size_t threads : {2u, 3u, 8u}) {
        const auto other = brute_force_partition(g, {.cap = 22, .threads = threads});
        EXPECT_EQ(other.side, one.side);
        EXPECT_EQ(other.deviation, one.deviation);
    }
}

TEST(BruteForce, CapEnforced) {
    const auto g = generators::complete(7);
    EXPECT_THROW(brute_force_partition(g, {.cap = 20, .threads = 0}), PartitionError);
    EXPECT_THROW(brute_force_partition(g, {.cap = 41, .threads = 0}), std::invalid_argument);
    EXPECT_THROW(brute_force_partition(WeightedGraph(2, {})), PartitionError);
    EXPECT_THROW(brute_force_partition(generators::path(2)), PartitionError);
}

TEST(Random, SingleSampleOnTwoParallelEdges) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto p = random_partition(oracle::load("two_parallel"), 1, seed);
        EXPECT_TRUE(std::abs(p.deviation) < 1e-12 || std::abs(p.deviation - 0.5) < 1e-12) << p.deviation;
    }
}

TEST(Random, Deterministic) {
    const auto g = oracle::load("random_n20_m60");
    const auto a = random_partition(g, 200, 42);
    const auto b = random_partition(g, 200, 42);
    EXPECT_EQ(a.side, b.side);
    EXPECT_EQ(a.deviation, b.deviation);
    EXPECT_EQ(a.candidates, 200u);
}

TEST(Random, LargerBudgetNeverWorse) {
    const auto g = oracle::load("k8");
    for (std::uint64_t seed : {0u, 1u, 99u}) {
        const auto small = random_partition(g, 64, seed);
        const auto large = random_partition(g, 4096, seed);
        EXPECT_LE(large.deviation, small.deviation + 1e-15);
    }
}

TEST(Random, BudgetMustBePositive) {
    EXPECT_THROW(random_partition(generators::path(3), 0, 1), std::invalid_argument);
}

TEST(Partitioner, AutoUsesBruteUpToCap) {
    Partitioner auto_policy;
    EXPECT_EQ(auto_policy(oracle::load("k4"), 0).method, PartitionMethod::Brute);
    EXPECT_EQ(auto_policy(oracle::load("k8"), 0).method, PartitionMethod::Random);
    Partitioner random{PartitionMethod::Random, 32, 5};
    EXPECT_EQ(random(oracle::load("k8"), 1).side, random(oracle::load("k8"), 1).side);
    EXPECT_NE(random(oracle::load("k8"), 1).side, random(oracle::load("k8"), 2).side);
}

TEST(Partitioner, MethodNames) {
    for (auto m : {PartitionMethod::Brute, PartitionMethod::Random, PartitionMethod::Auto})
        EXPECT_EQ(parse_partition_method(to_string(m)), m);
    EXPECT_THROW(parse_partition_method("greedy"), std::invalid_argument);
}

TEST(Bounds, CompleteBipartite) {
    const auto g = oracle::load("k23");
    const auto p = brute_force_partition(g);
    EXPECT_GE(p.alpha, 0.01);
    const auto [w1, w2] = partition_bounds_check(g, p);
    EXPECT_TRUE(w1.theoretical_holds());
    EXPECT_TRUE(w2.theoretical_holds());
    EXPECT_TRUE(w1.measured_holds());
    EXPECT_TRUE(w2.measured_holds());
}

TEST(Bounds, AllOnOneSideFailsLowerBound) {
    const auto g = oracle::load("k6");
    const auto p = evaluate_partition(g, std::vector<int>(g.m(), 1));
    EXPECT_NEAR(p.deviation, 0.5, 1e-12);
    EXPECT_TRUE(p.degenerate());
    // At any d < 1/2 the empty side cannot dominate (1/2 - d) L_G.
    PartitionResult tighter = p;
    tighter.deviation = 0.49;
    const auto [w1, w2] = partition_bounds_check(g, tighter);
    EXPECT_FALSE(w2.measured_lower);
    EXPECT_THROW(partition_bounds_check(generators::path(4), p), std::invalid_argument);
}

TEST(Bounds, ConsistentWithCertificate) {
    for (const char* name : {"k6", "cycle6", "dumbbell", "k23"}) {
        const auto g = oracle::load(name);
        const auto p = brute_force_partition(g);
        for (int s : {1, 2}) {
            const auto h = scale_weights(subgraph(g, p.edges_on(s)), 2.0);
            const auto cert = approx_factors(g, h);
            const auto [a, b] = p.factors(s);
            if (cert.kernel_match) {
                EXPECT_NEAR(cert.lower, 2.0 * a, 1e-9) << name;
                EXPECT_NEAR(cert.upper, 2.0 * b, 1e-9) << name;
            } else {
                EXPECT_NEAR(a, 0.0, 1e-9) << name;
            }
        }
    }
}

TEST(Bounds, MeasuredAlwaysHolds) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto g = generators::random_connected(6, 11, seed, seed % 2 == 0);
        const auto p = brute_force_partition(g);
        const auto [w1, w2] = partition_bounds_check(g, p);
        EXPECT_TRUE(w1.measured_holds()) << seed;
        EXPECT_TRUE(w2.measured_holds()) << seed;
        EXPECT_LE(p.deviation, 0.5 + 1e-12);
    }
}

}  // namespace
}  // namespace kss
